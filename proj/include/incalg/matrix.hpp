#pragma once

#include <optional>
#include <vector>

#include "incalg/field.hpp"

namespace incalg {

using Vec = std::vector<Scalar>;

/// Dense matrix over a fixed field, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, FieldSpec field);

    static Matrix identity(size_t n, FieldSpec field);
    static Matrix from_rows(const std::vector<Vec>& rows, size_t cols, FieldSpec field);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Vec row(size_t i) const;
    void set_row(size_t i, const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    /// Stacks o below this matrix (same column count).
    Matrix vstack(const Matrix& o) const;

    std::string str() const;

private:
    size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    Matrix mat;
    size_t rank = 0;
    std::vector<size_t> pivot_columns;
};

/// Unique reduced row-echelon form.
RrefResult rref(const Matrix& m);

size_t rank(const Matrix& m);

/// Solves a x = b; returns the solution with zero free coordinates, or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Row-vector arithmetic helpers.
Vec zero_vec(size_t n, FieldSpec f);
Vec row_times_matrix(const Vec& v, const Matrix& m);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& v);

/// A linear subspace of K^n, canonically presented by an RREF basis.
class Subspace {
public:
    Subspace(size_t ambient_dim, FieldSpec field);         // zero subspace
    Subspace(size_t ambient_dim, const Matrix& spanning);  // from spanning rows

    static Subspace full(size_t ambient_dim, FieldSpec field);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const FieldSpec& field() const { return basis_.field(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;

    /// Coordinates of v in the RREF basis; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

private:
    size_t ambient_;
    Matrix basis_;  // RREF, no zero rows
};

Subspace nullspace(const Matrix& a);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool subspace_contains(const Subspace& u, const Subspace& v);

}  // namespace incalg

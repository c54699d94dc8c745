#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "incalg/errors.hpp"

namespace incalg {

/// Dense integer matrix (arbitrary precision), row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpz_class& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    mpz_class det() const;  // by fraction-free elimination; square only

private:
    size_t rows_, cols_;
    std::vector<mpz_class> e_;
};

struct SnfResult {
    IntMatrix u, s, v;  // u·d·v = s, u and v unimodular, s diagonal with divisibility chain
};

/// Smith normal form by classical elimination, pivot = smallest nonzero |entry|.
SnfResult smith_normal_form(const IntMatrix& d);

}  // namespace incalg

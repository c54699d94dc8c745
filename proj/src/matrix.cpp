#include "incalg/matrix.hpp"

#include <sstream>

namespace incalg {

Matrix::Matrix(size_t rows, size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), e_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols, FieldSpec field) {
    Matrix m(rows.size(), cols, field);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("row length mismatch");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(size_t i) const {
    return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(size_t i, const Vec& v) {
    if (v.size() != cols_) throw ShapeError("row length mismatch");
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix product over different fields");
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw ShapeError("vstack column mismatch");
    Matrix r(rows_ + o.rows_, cols_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

RrefResult rref(const Matrix& m) {
    RrefResult r{m, 0, {}};
    Matrix& a = r.mat;
    size_t lead = 0;
    for (size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
        Scalar inv = a.at(lead, col).inverse();
        for (size_t j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(lead, j);
        }
        r.pivot_columns.push_back(col);
        ++lead;
    }
    r.rank = r.pivot_columns.size();
    return r;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: row counts differ");
    if (a.field() != b.field()) throw FieldMismatch("solve: fields differ");
    // RREF of the augmented matrix [a | b].
    Matrix aug(a.rows(), a.cols() + b.cols(), a.field());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    RrefResult r = rref(aug);
    Matrix x(a.cols(), b.cols(), a.field());
    for (size_t i = 0; i < r.rank; ++i) {
        size_t col = r.pivot_columns[i];
        if (col >= a.cols()) return std::nullopt;  // pivot in the b block: inconsistent
        for (size_t j = 0; j < b.cols(); ++j) x.at(col, j) = r.mat.at(i, a.cols() + j);
    }
    return x;
}

Vec zero_vec(size_t n, FieldSpec f) { return Vec(n, Scalar::zero(f)); }

Vec row_times_matrix(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows()) throw ShapeError("row*matrix shape mismatch");
    Vec r = zero_vec(m.cols(), m.field());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < m.cols(); ++j) {
            const Scalar& b = m.at(i, j);
            if (!b.is_zero()) r[j] += v[i] * b;
        }
    }
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector sum length mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec scale_vec(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

Subspace::Subspace(size_t ambient_dim, FieldSpec field)
    : ambient_(ambient_dim), basis_(0, ambient_dim, field) {}

Subspace::Subspace(size_t ambient_dim, const Matrix& spanning) : ambient_(ambient_dim), basis_(spanning) {
    if (spanning.cols() != ambient_dim) throw ShapeError("spanning rows have wrong length");
    RrefResult r = rref(spanning);
    Matrix b(r.rank, ambient_dim, spanning.field());
    for (size_t i = 0; i < r.rank; ++i)
        for (size_t j = 0; j < ambient_dim; ++j) b.at(i, j) = r.mat.at(i, j);
    basis_ = b;
}

Subspace Subspace::full(size_t ambient_dim, FieldSpec field) {
    return Subspace(ambient_dim, Matrix::identity(ambient_dim, field));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw ShapeError("vector has wrong ambient dimension");
    // Reduce v against the RREF basis; coordinates are read off at pivot columns.
    Vec rem = v;
    Vec coords = zero_vec(basis_.rows(), field());
    for (size_t i = 0; i < basis_.rows(); ++i) {
        size_t piv = 0;
        while (piv < ambient_ && basis_.at(i, piv).is_zero()) ++piv;
        if (!rem[piv].is_zero()) {
            coords[i] = rem[piv];
            Scalar c = rem[piv];
            for (size_t j = 0; j < ambient_; ++j) rem[j] -= c * basis_.at(i, j);
        }
    }
    if (!is_zero_vec(rem)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Subspace& other) const {
    for (size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace nullspace(const Matrix& a) {
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : r.pivot_columns) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t freec = 0; freec < a.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        Vec v = zero_vec(a.cols(), a.field());
        v[freec] = Scalar::one(a.field());
        for (size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.mat.at(i, freec);
        basis.push_back(std::move(v));
    }
    return Subspace(a.cols(), Matrix::from_rows(basis, a.cols(), a.field()));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw ShapeError("subspace sum: ambient mismatch");
    return Subspace(u.ambient_dim(), u.basis().vstack(v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw ShapeError("subspace intersect: ambient mismatch");
    // Solve x·Bu − y·Bv = 0 on stacked coefficients; intersection vectors are x·Bu.
    size_t du = u.dim(), dv = v.dim();
    FieldSpec f = u.field();
    if (du == 0 || dv == 0) return Subspace(u.ambient_dim(), f);
    Matrix stacked = u.basis().vstack(v.basis());  // (du+dv) x n
    Subspace ker = nullspace(stacked.transpose());
    std::vector<Vec> rows;
    for (size_t i = 0; i < ker.dim(); ++i) {
        Vec k = ker.basis().row(i);
        Vec x(k.begin(), k.begin() + du);
        rows.push_back(row_times_matrix(x, u.basis()));
    }
    return Subspace(u.ambient_dim(), Matrix::from_rows(rows, u.ambient_dim(), f));
}

bool subspace_contains(const Subspace& u, const Subspace& v) {
    return subspace_sum(u, v) == u;
}

}  // namespace incalg

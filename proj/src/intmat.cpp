#include "incalg/intmat.hpp"

namespace incalg {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("integer matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

mpz_class IntMatrix::det() const {
    if (rows_ != cols_) throw ShapeError("det of non-square matrix");
    size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a += q * row b
void add_row(IntMatrix& m, size_t a, size_t b, const mpz_class& q) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) += q * m.at(b, j);
}

void add_col(IntMatrix& m, size_t a, size_t b, const mpz_class& q) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, a) += q * m.at(i, b);
}

void negate_row(IntMatrix& m, size_t a) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& d) {
    size_t rows = d.rows(), cols = d.cols();
    SnfResult r{IntMatrix::identity(rows), d, IntMatrix::identity(cols)};
    IntMatrix& s = r.s;
    size_t t = 0;
    size_t steps = std::min(rows, cols);
    while (t < steps) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        size_t pi = t, pj = t;
        bool found = false;
        mpz_class best;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (s.at(i, j) == 0) continue;
                mpz_class a = abs(s.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) {
            swap_rows(s, t, pi);
            swap_rows(r.u, t, pi);
        }
        if (pj != t) {
            swap_cols(s, t, pj);
            swap_cols(r.v, t, pj);
        }
        bool dirty = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (s.at(i, t) == 0) continue;
            mpz_class q = s.at(i, t) / s.at(t, t);
            // round toward smaller remainder
            add_row(s, i, t, -q);
            add_row(r.u, i, t, -q);
            if (s.at(i, t) != 0) dirty = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (s.at(t, j) == 0) continue;
            mpz_class q = s.at(t, j) / s.at(t, t);
            add_col(s, j, t, -q);
            add_col(r.v, j, t, -q);
            if (s.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // re-pick a smaller pivot
        // Divisibility: fold in any trailing entry not divisible by the pivot.
        bool fixed = false;
        for (size_t i = t + 1; i < rows && !fixed; ++i)
            for (size_t j = t + 1; j < cols && !fixed; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    add_row(s, t, i, 1);
                    add_row(r.u, t, i, 1);
                    fixed = true;
                }
        if (fixed) continue;
        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(r.u, t);
        }
        ++t;
    }
    return r;
}

}  // namespace incalg

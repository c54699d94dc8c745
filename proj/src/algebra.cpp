#include "incalg/algebra.hpp"

#include <algorithm>
#include <map>

#include "incalg/intmat.hpp"
#include "incalg/numtheory.hpp"

namespace incalg {

Algebra::Algebra(FieldSpec field, std::vector<std::string> basis_labels,
                 const std::vector<std::tuple<size_t, size_t, size_t, Scalar>>& constants, Vec unit)
    : field_(field),
      dim_(basis_labels.size()),
      labels_(std::move(basis_labels)),
      c_(dim_ * dim_ * dim_, Scalar::zero(field)),
      unit_(std::move(unit)) {
    field_.validate();
    if (unit_.size() != dim_) throw ShapeError("unit vector has wrong length");
    for (const auto& [i, j, k, v] : constants) {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw ShapeError("structure constant index out of range");
        if (v.field() != field_) throw FieldMismatch("structure constant over wrong field");
        c_[(i * dim_ + j) * dim_ + k] = v;
    }
}

Vec Algebra::basis_element(size_t i) const {
    Vec v = zero_vec(dim_, field_);
    v[i] = Scalar::one(field_);
    return v;
}

Vec Algebra::mult(const Vec& a, const Vec& b) const {
    if (a.size() != dim_ || b.size() != dim_) throw ShapeError("algebra element has wrong length");
    Vec r = zero_vec(dim_, field_);
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            Scalar coef = a[i] * b[j];
            for (size_t k = 0; k < dim_; ++k) {
                const Scalar& c = structure(i, j, k);
                if (!c.is_zero()) r[k] += coef * c;
            }
        }
    }
    return r;
}

Matrix Algebra::left_mult(const Vec& a) const {
    Matrix m(dim_, dim_, field_);
    for (size_t j = 0; j < dim_; ++j) m.set_row(j, mult(a, basis_element(j)));
    return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
    Matrix m(dim_, dim_, field_);
    for (size_t j = 0; j < dim_; ++j) m.set_row(j, mult(basis_element(j), a));
    return m;
}

std::optional<AlgebraViolation> verify_algebra(const Algebra& a) {
    size_t n = a.dim();
    for (size_t i = 0; i < n; ++i) {
        Vec bi = a.basis_element(i);
        if (a.mult(a.unit(), bi) != bi) return AlgebraViolation{"left-unit", i, 0, 0};
        if (a.mult(bi, a.unit()) != bi) return AlgebraViolation{"right-unit", i, 0, 0};
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec ij = a.mult(a.basis_element(i), a.basis_element(j));
            for (size_t k = 0; k < n; ++k) {
                Vec lhs = a.mult(ij, a.basis_element(k));
                Vec rhs = a.mult(a.basis_element(i), a.mult(a.basis_element(j), a.basis_element(k)));
                if (lhs != rhs) return AlgebraViolation{"associativity", i, j, k};
            }
        }
    return std::nullopt;
}

Subspace centre_basis(const Algebra& a) {
    size_t n = a.dim();
    // z is central iff z·(R_i − L_i) = 0 for all i, stacked into one wide matrix.
    Matrix big(n, n * n, a.field());
    for (size_t i = 0; i < n; ++i) {
        Matrix d = a.right_mult(a.basis_element(i)) - a.left_mult(a.basis_element(i));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) big.at(r, i * n + c) = d.at(r, c);
    }
    return nullspace(big.transpose());
}

namespace {

/// True when the span is nilpotent as a (non-unital) subalgebra: the chain
/// V ⊇ V·V ⊇ V·V·V ⊇ ... reaches zero.
bool nilpotent_span(const Algebra& a, const Subspace& v) {
    Subspace cur = v;
    while (cur.dim() > 0) {
        std::vector<Vec> rows;
        for (size_t r = 0; r < cur.dim(); ++r) {
            Matrix rm = a.right_mult(cur.basis().row(r));
            for (size_t s = 0; s < v.dim(); ++s)
                rows.push_back(row_times_matrix(v.basis().row(s), rm));
        }
        Subspace next(a.dim(), Matrix::from_rows(rows, a.dim(), a.field()));
        if (next.dim() >= cur.dim()) return false;
        cur = next;
    }
    return true;
}

IntMatrix int_power(IntMatrix base, unsigned long e) {
    IntMatrix result = IntMatrix::identity(base.rows());
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// f(z) = tr(Ẑ^e)/e mod p, where Ẑ is the entrywise integer lift of the left
/// regular representation of z and e is a power of p. On each refinement
/// stage of the small-characteristic radical computation this functional is
/// well defined and additive (Friedl–Rónyai).
Scalar ppower_trace(const Algebra& a, const Vec& z, unsigned long e, unsigned long p) {
    size_t n = a.dim();
    Matrix m = a.left_mult(z);
    IntMatrix zi(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) zi.at(r, c) = m.at(r, c).value().get_num();
    IntMatrix pw = int_power(std::move(zi), e);
    mpz_class t = 0;
    for (size_t r = 0; r < n; ++r) t += pw.at(r, r);
    if (t % e != 0) throw std::logic_error("p-power trace not divisible on a refinement stage");
    mpz_class residue = (t / e) % p;
    return Scalar(a.field(), mpq_class(residue));
}

/// One refinement stage: {x ∈ V : f(x·y) = 0 for all y ∈ V}, computed through
/// coordinates of the products in the stage basis.
Subspace refine_radical_stage(const Algebra& a, const Subspace& v, unsigned long e,
                              unsigned long p) {
    size_t d = v.dim();
    std::vector<Scalar> f;
    for (size_t m = 0; m < d; ++m) f.push_back(ppower_trace(a, v.basis().row(m), e, p));
    Matrix g(d, d, a.field());
    for (size_t k = 0; k < d; ++k) {
        Matrix rk = a.right_mult(v.basis().row(k));
        for (size_t j = 0; j < d; ++j) {
            Vec z = row_times_matrix(v.basis().row(j), rk);
            auto coords = v.coordinates(z);
            if (!coords) throw std::logic_error("refinement stage not multiplicatively closed");
            Scalar s = Scalar::zero(a.field());
            for (size_t m = 0; m < d; ++m)
                if (!(*coords)[m].is_zero()) s += (*coords)[m] * f[m];
            g.at(j, k) = s;
        }
    }
    Subspace ker = nullspace(g.transpose());
    std::vector<Vec> rows;
    for (size_t r = 0; r < ker.dim(); ++r)
        rows.push_back(row_times_matrix(ker.basis().row(r), v.basis()));
    return Subspace(a.dim(), Matrix::from_rows(rows, a.dim(), a.field()));
}

}  // namespace

Subspace jacobson_radical(const Algebra& a) {
    size_t n = a.dim();
    unsigned long p = a.field().characteristic;
    std::vector<Matrix> left;
    left.reserve(n);
    for (size_t i = 0; i < n; ++i) left.push_back(a.left_mult(a.basis_element(i)));
    Matrix gram(n, n, a.field());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Scalar t = Scalar::zero(a.field());
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) {
                    const Scalar& x = left[i].at(r, c);
                    if (x.is_zero()) continue;
                    const Scalar& y = left[j].at(c, r);
                    if (!y.is_zero()) t += x * y;
                }
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    Subspace v = nullspace(gram);
    if (p == 0 || p > n) return v;
    // Small characteristic: the trace-form kernel only contains the radical.
    // Refine with the p-power trace functionals tr(Ẑ^{p^i})/p^i for
    // p^i ≤ n (Friedl–Rónyai); every stage is an ideal containing the
    // radical, so a stage that is already nilpotent equals it.
    for (unsigned long e = p; e <= n; e *= p) {
        if (v.dim() == 0 || nilpotent_span(a, v)) return v;
        v = refine_radical_stage(a, v, e, p);
        if (e > n / p) break;  // avoid overflow of e *= p on the last step
    }
    if (!nilpotent_span(a, v))
        throw std::logic_error("radical refinement did not reach a nilpotent ideal");
    return v;
}

std::vector<Subspace> radical_powers(const Algebra& a, const Subspace& j) {
    std::vector<Subspace> result{j};
    while (result.back().dim() > 0 && result.size() <= a.dim() + 1) {
        const Subspace& cur = result.back();
        std::vector<Vec> rows;
        for (size_t r = 0; r < cur.dim(); ++r)
            for (size_t s = 0; s < j.dim(); ++s)
                rows.push_back(a.mult(cur.basis().row(r), j.basis().row(s)));
        result.emplace_back(a.dim(), Matrix::from_rows(rows, a.dim(), a.field()));
        if (result.back().dim() >= cur.dim() && cur.dim() > 0)
            throw std::logic_error("radical powers do not decrease; not a nilpotent ideal");
    }
    return result;
}

namespace {

/// A/J with multiplication through chosen complement coordinates.
struct QuotientAlg {
    const Algebra& a;
    const Subspace& j;
    std::vector<size_t> pivot_cols, comp_cols;

    QuotientAlg(const Algebra& alg, const Subspace& rad) : a(alg), j(rad) {
        std::vector<bool> is_pivot(a.dim(), false);
        for (size_t r = 0; r < j.dim(); ++r) {
            size_t p = 0;
            while (j.basis().at(r, p).is_zero()) ++p;
            pivot_cols.push_back(p);
            is_pivot[p] = true;
        }
        for (size_t c = 0; c < a.dim(); ++c)
            if (!is_pivot[c]) comp_cols.push_back(c);
    }

    size_t dim() const { return comp_cols.size(); }

    Vec reduce(Vec v) const {
        for (size_t r = 0; r < j.dim(); ++r) {
            size_t p = pivot_cols[r];
            if (v[p].is_zero()) continue;
            Scalar c = v[p];
            for (size_t k = 0; k < a.dim(); ++k) v[k] -= c * j.basis().at(r, k);
        }
        return v;
    }

    Vec to_q(const Vec& v) const {
        Vec red = reduce(v);
        Vec q = zero_vec(dim(), a.field());
        for (size_t i = 0; i < dim(); ++i) q[i] = red[comp_cols[i]];
        return q;
    }

    Vec lift(const Vec& q) const {
        Vec v = zero_vec(a.dim(), a.field());
        for (size_t i = 0; i < dim(); ++i) v[comp_cols[i]] = q[i];
        return v;
    }

    Vec qunit() const { return to_q(a.unit()); }
    Vec qbasis(size_t i) const {
        Vec q = zero_vec(dim(), a.field());
        q[i] = Scalar::one(a.field());
        return q;
    }
    Vec qmult(const Vec& x, const Vec& y) const { return to_q(a.mult(lift(x), lift(y))); }
    Vec qscale(const Scalar& c, const Vec& x) const { return scale_vec(c, x); }
};

}  // namespace

FrameResult idempotent_frame(const Algebra& a) {
    Subspace j = jacobson_radical(a);
    QuotientAlg q(a, j);
    size_t qd = q.dim();
    FieldSpec f = a.field();

    // Split basic needs a commutative semisimple quotient.
    for (size_t i = 0; i < qd; ++i)
        for (size_t k = i + 1; k < qd; ++k) {
            Vec ik = q.qmult(q.qbasis(i), q.qbasis(k));
            Vec ki = q.qmult(q.qbasis(k), q.qbasis(i));
            if (ik != ki)
                return NotSplitBasic{"A/J is noncommutative", q.lift(q.qbasis(i)), {}};
        }

    // Split the commutative semisimple quotient into 1-dimensional blocks.
    std::vector<Vec> blocks{q.qunit()};
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            const Vec fq = blocks[bi];
            // Block f·Q; find an element not proportional to f.
            std::optional<Vec> z;
            {
                std::vector<Vec> span_rows{fq};
                Subspace fspan(qd, Matrix::from_rows({fq}, qd, f));
                for (size_t i = 0; i < qd; ++i) {
                    Vec cand = q.qmult(fq, q.qbasis(i));
                    if (!fspan.contains(cand)) {
                        z = cand;
                        break;
                    }
                }
            }
            if (!z) continue;  // block is 1-dimensional
            // Minimal polynomial of z in the unital algebra (f·Q, f).
            std::vector<Vec> powers{fq, *z};
            std::vector<Scalar> coeffs;
            while (true) {
                size_t k = powers.size() - 1;
                Matrix stacked = Matrix::from_rows({powers.begin(), powers.begin() + k}, qd, f);
                Matrix rhs(qd, 1, f);
                for (size_t c = 0; c < qd; ++c) rhs.at(c, 0) = powers[k][c];
                auto sol = solve(stacked.transpose(), rhs);
                if (sol) {
                    coeffs.assign(k + 1, Scalar::zero(f));
                    for (size_t i = 0; i < k; ++i) coeffs[i] = -sol->at(i, 0);
                    coeffs[k] = Scalar::one(f);
                    break;
                }
                powers.push_back(q.qmult(powers.back(), *z));
            }
            size_t deg = coeffs.size() - 1;
            std::vector<Scalar> roots = polynomial_roots(f, coeffs);
            if (roots.size() < deg)
                return NotSplitBasic{"minimal polynomial does not split into linear factors",
                                     q.lift(*z), coeffs};
            // Lagrange interpolation idempotents for the distinct eigenvalues.
            std::vector<Vec> pieces;
            for (size_t i = 0; i < roots.size(); ++i) {
                Vec g = fq;
                for (size_t jj = 0; jj < roots.size(); ++jj) {
                    if (jj == i) continue;
                    Vec factor = add_vec(*z, q.qscale(-roots[jj], fq));
                    g = q.qmult(g, factor);
                    g = q.qscale((roots[i] - roots[jj]).inverse(), g);
                }
                pieces.push_back(g);
            }
            blocks.erase(blocks.begin() + bi);
            blocks.insert(blocks.begin() + bi, pieces.begin(), pieces.end());
            changed = true;
            break;
        }
    }

    if (blocks.size() != qd)
        throw std::logic_error("semisimple quotient splitting produced wrong block count");

    // Lift along the nilpotent radical: e ← 3e² − 2e³ to stability, with
    // sequential orthogonalization e ← (1−g)·e·(1−g) against the fixed sum g.
    std::vector<Vec> lifted;
    if (blocks.size() == 1) {
        lifted.push_back(a.unit());
    } else {
        Vec g = zero_vec(a.dim(), f);
        for (size_t bi = 0; bi + 1 < blocks.size(); ++bi) {
            Vec one_minus_g = add_vec(a.unit(), scale_vec(Scalar(f, -1), g));
            Vec e = a.mult(a.mult(one_minus_g, q.lift(blocks[bi])), one_minus_g);
            for (size_t iter = 0; iter < 64; ++iter) {
                Vec e2 = a.mult(e, e);
                if (e2 == e) break;
                Vec e3 = a.mult(e2, e);
                e = add_vec(scale_vec(Scalar(f, 3), e2), scale_vec(Scalar(f, -2), e3));
            }
            if (a.mult(e, e) != e) throw std::logic_error("idempotent lifting did not converge");
            lifted.push_back(e);
            g = add_vec(g, e);
        }
        Vec last = add_vec(a.unit(), scale_vec(Scalar(f, -1), g));
        if (a.mult(last, last) != last) throw std::logic_error("residual idempotent not idempotent");
        lifted.push_back(last);
    }

    // Primitivity: dim e(A/J)e = 1 for each lifted idempotent.
    for (const Vec& e : lifted) {
        std::vector<Vec> rows;
        for (size_t i = 0; i < a.dim(); ++i)
            rows.push_back(q.to_q(a.mult(e, a.mult(a.basis_element(i), e))));
        Subspace s(qd, Matrix::from_rows(rows, qd, f));
        if (s.dim() != 1) throw std::logic_error("lifted idempotent not primitive");
    }
    return IdempotentFrame{lifted};
}

Subspace peirce_subspace(const Algebra& a, const IdempotentFrame& f, size_t x, size_t y) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < a.dim(); ++i)
        rows.push_back(a.mult(f.idempotents[y], a.mult(a.basis_element(i), f.idempotents[x])));
    return Subspace(a.dim(), Matrix::from_rows(rows, a.dim(), a.field()));
}

std::vector<std::vector<size_t>> peirce_dims(const Algebra& a, const IdempotentFrame& f) {
    size_t n = f.idempotents.size();
    std::vector<std::vector<size_t>> d(n, std::vector<size_t>(n, 0));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) d[x][y] = peirce_subspace(a, f, x, y).dim();
    return d;
}

Quiver ext_quiver(const Algebra& a, const IdempotentFrame& f) {
    Subspace j = jacobson_radical(a);
    auto powers = radical_powers(a, j);
    Subspace j2 = powers.size() > 1 ? powers[1] : Subspace(a.dim(), a.field());
    Quiver quiv;
    size_t n = f.idempotents.size();
    for (size_t v = 0; v < n; ++v) quiv.vertices.push_back("x" + std::to_string(v));
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) {
            std::vector<Vec> rows;
            for (size_t r = 0; r < j.dim(); ++r)
                rows.push_back(a.mult(f.idempotents[v], a.mult(j.basis().row(r), f.idempotents[u])));
            Subspace evju(a.dim(), Matrix::from_rows(rows, a.dim(), a.field()));
            size_t m = subspace_sum(evju, j2).dim() - j2.dim();
            if (m > 0) quiv.arrows.push_back({u, v, m});
        }
    return quiv;
}

Matrix RightModule::act(const Vec& algebra_element) const {
    Matrix r(dim, dim, algebra->field());
    for (size_t i = 0; i < algebra_element.size(); ++i)
        if (!algebra_element[i].is_zero()) r = r + action[i].scaled(algebra_element[i]);
    return r;
}

std::optional<ModuleViolation> verify_module(const RightModule& m) {
    const Algebra& a = *m.algebra;
    if (m.action.size() != a.dim()) return ModuleViolation{"unit", 0, 0};
    if (m.act(a.unit()) != Matrix::identity(m.dim, a.field())) return ModuleViolation{"unit", 0, 0};
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) {
            Matrix lhs = m.action[i] * m.action[j];
            Matrix rhs(m.dim, m.dim, a.field());
            for (size_t k = 0; k < a.dim(); ++k) {
                const Scalar& c = a.structure(i, j, k);
                if (!c.is_zero()) rhs = rhs + m.action[k].scaled(c);
            }
            if (lhs != rhs) return ModuleViolation{"multiplicativity", i, j};
        }
    return std::nullopt;
}

RightModule zero_module(AlgebraPtr a) {
    RightModule m{a, 0, {}};
    for (size_t i = 0; i < a->dim(); ++i) m.action.emplace_back(0, 0, a->field());
    return m;
}

RightModule regular_module(AlgebraPtr a) {
    RightModule m{a, a->dim(), {}};
    for (size_t i = 0; i < a->dim(); ++i) m.action.push_back(a->right_mult(a->basis_element(i)));
    return m;
}

RightModule direct_sum(const RightModule& m, const RightModule& n) {
    if (m.algebra != n.algebra) throw AlgebraMismatch("direct sum over different algebras");
    RightModule r{m.algebra, m.dim + n.dim, {}};
    for (size_t i = 0; i < m.action.size(); ++i) {
        Matrix blk(r.dim, r.dim, m.algebra->field());
        for (size_t a = 0; a < m.dim; ++a)
            for (size_t b = 0; b < m.dim; ++b) blk.at(a, b) = m.action[i].at(a, b);
        for (size_t a = 0; a < n.dim; ++a)
            for (size_t b = 0; b < n.dim; ++b) blk.at(m.dim + a, m.dim + b) = n.action[i].at(a, b);
        r.action.push_back(blk);
    }
    return r;
}

RightModule projective_module(AlgebraPtr a, const IdempotentFrame& f, size_t x) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < a->dim(); ++i) rows.push_back(a->mult(f.idempotents[x], a->basis_element(i)));
    Subspace s(a->dim(), Matrix::from_rows(rows, a->dim(), a->field()));
    RightModule m{a, s.dim(), {}};
    for (size_t j = 0; j < a->dim(); ++j) {
        Matrix rho(s.dim(), s.dim(), a->field());
        for (size_t r = 0; r < s.dim(); ++r) {
            Vec w = a->mult(s.basis().row(r), a->basis_element(j));
            auto coords = s.coordinates(w);
            if (!coords) throw std::logic_error("e_x·A not a right ideal?");
            rho.set_row(r, *coords);
        }
        m.action.push_back(rho);
    }
    return m;
}

Subspace hom_modules(const RightModule& m, const RightModule& n) {
    if (m.algebra != n.algebra) throw AlgebraMismatch("hom between modules over different algebras");
    const Algebra& a = *m.algebra;
    size_t dm = m.dim, dn = n.dim;
    size_t unknowns = dm * dn;
    std::vector<Vec> eq_rows;
    for (size_t b = 0; b < a.dim(); ++b) {
        const Matrix& am = m.action[b];
        const Matrix& an = n.action[b];
        for (size_t i = 0; i < dm; ++i)
            for (size_t j = 0; j < dn; ++j) {
                Vec row = zero_vec(unknowns, a.field());
                for (size_t k = 0; k < dm; ++k)
                    if (!am.at(i, k).is_zero()) row[k * dn + j] += am.at(i, k);
                for (size_t k = 0; k < dn; ++k)
                    if (!an.at(k, j).is_zero()) row[i * dn + k] -= an.at(k, j);
                if (!is_zero_vec(row)) eq_rows.push_back(std::move(row));
            }
    }
    Matrix sys = Matrix::from_rows(eq_rows, unknowns, a.field());
    return nullspace(sys);
}

Matrix hom_element_to_matrix(const RightModule& m, const RightModule& n, const Vec& flat) {
    Matrix phi(m.dim, n.dim, m.algebra->field());
    for (size_t i = 0; i < m.dim; ++i)
        for (size_t j = 0; j < n.dim; ++j) phi.at(i, j) = flat[i * n.dim + j];
    return phi;
}

size_t multiplicity(const RightModule& m, const IdempotentFrame& f, size_t x) {
    return rank(m.act(f.idempotents[x]));
}

std::vector<Subspace> radical_series(const RightModule& m, const Subspace& j) {
    FieldSpec f = m.algebra->field();
    std::vector<Subspace> result{Subspace::full(m.dim, f)};
    while (result.back().dim() > 0 && result.size() <= m.dim + 1) {
        const Subspace& cur = result.back();
        std::vector<Vec> rows;
        for (size_t r = 0; r < cur.dim(); ++r)
            for (size_t s = 0; s < j.dim(); ++s)
                rows.push_back(row_times_matrix(cur.basis().row(r), m.act(j.basis().row(s))));
        Subspace next(m.dim, Matrix::from_rows(rows, m.dim, f));
        if (next.dim() >= cur.dim() && cur.dim() > 0)
            throw std::logic_error("module radical series does not decrease");
        result.push_back(next);
    }
    return result;
}

Subspace annihilator(const RightModule& m) {
    const Algebra& a = *m.algebra;
    size_t n = a.dim(), d = m.dim;
    Matrix big(n, d * d, a.field());
    for (size_t i = 0; i < n; ++i)
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c) big.at(i, r * d + c) = m.action[i].at(r, c);
    return nullspace(big.transpose());
}

std::vector<Subspace> submodule_lattice(const RightModule& m, size_t vector_bound) {
    const Algebra& a = *m.algebra;
    FieldSpec f = a.field();
    if (f.is_rational()) throw EnumerationTooLarge("submodule enumeration needs a finite field");
    unsigned long p = f.characteristic;
    double count = 1;
    for (size_t i = 0; i < m.dim; ++i) count *= static_cast<double>(p);
    if (count > static_cast<double>(vector_bound))
        throw EnumerationTooLarge("p^dim exceeds the enumeration bound");

    std::map<std::string, Subspace> found;
    Subspace zero(m.dim, f);
    found.emplace(zero.basis().str() + "#0", zero);
    auto key = [](const Subspace& s) {
        return s.basis().str() + "#" + std::to_string(s.dim());
    };

    // Cyclic submodules from every vector.
    std::vector<unsigned long> odo(m.dim, 0);
    while (true) {
        size_t pos = 0;
        while (pos < m.dim && odo[pos] + 1 == p) odo[pos++] = 0;
        if (pos == m.dim) break;
        ++odo[pos];
        Vec v = zero_vec(m.dim, f);
        for (size_t i = 0; i < m.dim; ++i) v[i] = Scalar(f, static_cast<long>(odo[i]));
        std::vector<Vec> rows;
        for (size_t b = 0; b < a.dim(); ++b) rows.push_back(row_times_matrix(v, m.action[b]));
        Subspace cyc(m.dim, Matrix::from_rows(rows, m.dim, f));
        found.emplace(key(cyc), cyc);
    }

    // Close under joins.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subspace> current;
        for (const auto& [k, s] : found) current.push_back(s);
        for (size_t i = 0; i < current.size(); ++i)
            for (size_t j = i + 1; j < current.size(); ++j) {
                Subspace s = subspace_sum(current[i], current[j]);
                if (found.emplace(key(s), s).second) grew = true;
            }
    }
    std::vector<Subspace> result;
    for (const auto& [k, s] : found) result.push_back(s);
    std::sort(result.begin(), result.end(), [&](const Subspace& x, const Subspace& y) {
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        return x.basis().str() < y.basis().str();
    });
    return result;
}

bool is_distributive_lattice(const std::vector<Subspace>& lattice) {
    for (const auto& u : lattice)
        for (const auto& v : lattice)
            for (const auto& w : lattice) {
                Subspace lhs = subspace_intersect(u, subspace_sum(v, w));
                Subspace rhs = subspace_sum(subspace_intersect(u, v), subspace_intersect(u, w));
                if (!(lhs == rhs)) return false;
            }
    return true;
}

bool is_distributive_module(const RightModule& m, size_t vector_bound) {
    return is_distributive_lattice(submodule_lattice(m, vector_bound));
}

std::optional<std::pair<Subspace, Subspace>> has_square_subquotient(
    const RightModule& m, const IdempotentFrame& f, size_t x, size_t vector_bound) {
    auto lattice = submodule_lattice(m, vector_bound);
    const Algebra& a = *m.algebra;
    // Character of S_x on idempotents: e_x acts as 1, the other frame members as 0.
    for (const auto& n2 : lattice)
        for (const auto& n1 : lattice) {
            if (n1.dim() + 2 != n2.dim() || !subspace_contains(n2, n1)) continue;
            bool ok = true;
            for (size_t y = 0; y < f.idempotents.size() && ok; ++y) {
                Matrix act = m.act(f.idempotents[y]);
                for (size_t r = 0; r < n2.dim() && ok; ++r) {
                    Vec v = row_times_matrix(n2.basis().row(r), act);
                    Vec expect = (y == x) ? n2.basis().row(r) : zero_vec(m.dim, a.field());
                    Vec diff = add_vec(v, scale_vec(Scalar(a.field(), -1), expect));
                    if (!n1.contains(diff)) ok = false;
                }
            }
            if (!ok) continue;
            // The idempotent conditions make every composition factor of N2/N1
            // equal to S_x; the quotient is S_x ⊕ S_x iff each basis element
            // additionally acts on it by one scalar.
            for (size_t b = 0; b < a.dim() && ok; ++b) {
                Matrix act_b = m.act(a.basis_element(b));
                std::optional<Scalar> cval;  // common scalar: v·b ≡ c·v mod N1
                for (size_t r = 0; r < n2.dim() && ok; ++r) {
                    Vec v = n2.basis().row(r);
                    if (n1.contains(v)) continue;  // constraint vacuous on N1
                    Vec w = row_times_matrix(v, act_b);
                    if (cval) {
                        if (!n1.contains(add_vec(w, scale_vec(-*cval, v)))) ok = false;
                        continue;
                    }
                    bool solved = false;
                    unsigned long p = a.field().characteristic;
                    for (unsigned long cc = 0; cc < p; ++cc) {
                        Scalar c(a.field(), static_cast<long>(cc));
                        if (n1.contains(add_vec(w, scale_vec(-c, v)))) {
                            cval = c;
                            solved = true;
                            break;
                        }
                    }
                    if (!solved) ok = false;
                }
            }
            if (ok) return std::make_pair(n1, n2);
        }
    return std::nullopt;
}

bool is_multiplicity_free(const RightModule& m, const IdempotentFrame& f) {
    for (size_t x = 0; x < f.idempotents.size(); ++x)
        if (multiplicity(m, f, x) > 1) return false;
    return true;
}

Algebra subalgebra_on(const Algebra& a, const Subspace& s, const Vec& unit,
                      const std::string& label_prefix) {
    size_t d = s.dim();
    std::vector<std::string> labels;
    for (size_t i = 0; i < d; ++i) labels.push_back(label_prefix + std::to_string(i));
    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> constants;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Vec prod = a.mult(s.basis().row(i), s.basis().row(j));
            auto coords = s.coordinates(prod);
            if (!coords) throw ShapeError("subspace not multiplicatively closed");
            for (size_t k = 0; k < d; ++k)
                if (!(*coords)[k].is_zero()) constants.emplace_back(i, j, k, (*coords)[k]);
        }
    auto ucoords = s.coordinates(unit);
    if (!ucoords) throw ShapeError("unit not inside subalgebra subspace");
    return Algebra(a.field(), labels, constants, *ucoords);
}

Algebra change_basis(const Algebra& a, const Matrix& t) {
    size_t n = a.dim();
    if (t.rows() != n || t.cols() != n) throw ShapeError("basis change matrix must be n×n");
    if (rank(t) != n) throw ShapeError("basis change matrix not invertible");
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    Matrix tt = t.transpose();
    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> constants;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec prod = a.mult(t.row(i), t.row(j));
            Matrix rhs(n, 1, a.field());
            for (size_t k = 0; k < n; ++k) rhs.at(k, 0) = prod[k];
            auto sol = solve(tt, rhs);
            if (!sol) throw std::logic_error("basis change solve failed");
            for (size_t k = 0; k < n; ++k)
                if (!sol->at(k, 0).is_zero()) constants.emplace_back(i, j, k, sol->at(k, 0));
        }
    Matrix rhs(n, 1, a.field());
    for (size_t k = 0; k < n; ++k) rhs.at(k, 0) = a.unit()[k];
    auto usol = solve(tt, rhs);
    Vec unit = zero_vec(n, a.field());
    for (size_t k = 0; k < n; ++k) unit[k] = usol->at(k, 0);
    return Algebra(a.field(), labels, constants, unit);
}

}  // namespace incalg

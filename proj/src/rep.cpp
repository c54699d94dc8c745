#include "incalg/rep.hpp"

#include <algorithm>

namespace incalg {

const Matrix& Representation::cover_map(size_t x, size_t y) const {
    auto it = cover_maps.find({x, y});
    if (it == cover_maps.end()) throw UnknownElement("no cover map for the given pair");
    return it->second;
}

namespace {

// All Hasse paths y = p_0 ⋗ p_1 ⋗ ... ⋗ p_k = x, as vertex sequences.
void cover_paths_down(const Poset& p, size_t from, size_t to, std::vector<size_t>& cur,
                      std::vector<std::vector<size_t>>& out) {
    if (from == to) {
        out.push_back(cur);
        return;
    }
    for (const auto& [u, v] : p.covers()) {
        if (v != from || !p.leq(to, u)) continue;
        cur.push_back(u);
        cover_paths_down(p, u, to, cur, out);
        cur.pop_back();
    }
}

Matrix path_composite(const Representation& m, const std::vector<size_t>& path) {
    Matrix acc = Matrix::identity(m.dims[path.front()], m.field);
    for (size_t i = 0; i + 1 < path.size(); ++i)
        acc = m.cover_map(path[i + 1], path[i]) * acc;
    return acc;
}

}  // namespace

Matrix Representation::composite(size_t x, size_t y) const {
    if (!poset->leq(x, y)) throw UnknownElement("composite requires x <= y");
    if (x == y) return Matrix::identity(dims[x], field);
    for (const auto& [u, v] : poset->covers())
        if (v == y && poset->leq(x, u)) return composite(x, u) * cover_map(u, y);
    throw std::logic_error("no cover path found below a comparable pair");
}

size_t Representation::total_dim() const {
    size_t t = 0;
    for (size_t d : dims) t += d;
    return t;
}

std::optional<RepViolation> verify_rep(const Representation& m) {
    const Poset& p = *m.poset;
    for (const auto& [x, y] : p.covers()) {
        const Matrix& phi = m.cover_map(x, y);
        if (phi.rows() != m.dims[x] || phi.cols() != m.dims[y])
            throw ShapeError("cover map has wrong shape");
    }
    for (const auto& [x, y] : p.strict_pairs()) {
        std::vector<std::vector<size_t>> paths;
        std::vector<size_t> cur{y};
        cover_paths_down(p, y, x, cur, paths);
        Matrix ref = path_composite(m, paths.front());
        for (size_t i = 1; i < paths.size(); ++i)
            if (!(path_composite(m, paths[i]) == ref)) return RepViolation{x, y, paths.front(), paths[i]};
    }
    return std::nullopt;
}

Representation simple_rep(PosetPtr p, FieldSpec f, size_t x) {
    Representation m{p, f, std::vector<size_t>(p->size(), 0), {}};
    m.dims[x] = 1;
    for (const auto& [u, v] : p->covers()) m.cover_maps[{u, v}] = Matrix(m.dims[u], m.dims[v], f);
    return m;
}

Representation canonical_rep(PosetPtr p, FieldSpec f) {
    Representation m{p, f, std::vector<size_t>(p->size(), 1), {}};
    for (const auto& [u, v] : p->covers()) m.cover_maps[{u, v}] = Matrix::identity(1, f);
    return m;
}

Representation projective_rep(PosetPtr p, FieldSpec f, size_t x) {
    Representation m{p, f, std::vector<size_t>(p->size(), 0), {}};
    for (size_t u = 0; u < p->size(); ++u) m.dims[u] = p->leq(u, x) ? 1 : 0;
    for (const auto& [u, v] : p->covers()) {
        Matrix phi(m.dims[u], m.dims[v], f);
        if (m.dims[u] == 1 && m.dims[v] == 1) phi.at(0, 0) = Scalar::one(f);
        m.cover_maps[{u, v}] = phi;
    }
    return m;
}

Representation direct_sum(const Representation& m, const Representation& n) {
    if (!(*m.poset == *n.poset) || !(m.field == n.field))
        throw AlgebraMismatch("direct sum of representations over different posets or fields");
    Representation s{m.poset, m.field, {}, {}};
    for (size_t i = 0; i < m.dims.size(); ++i) s.dims.push_back(m.dims[i] + n.dims[i]);
    for (const auto& [u, v] : m.poset->covers()) {
        Matrix phi(s.dims[u], s.dims[v], m.field);
        const Matrix& a = m.cover_map(u, v);
        const Matrix& b = n.cover_map(u, v);
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) phi.at(i, j) = a.at(i, j);
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j)
                phi.at(m.dims[u] + i, m.dims[v] + j) = b.at(i, j);
        s.cover_maps[{u, v}] = phi;
    }
    return s;
}

std::vector<size_t> block_offsets(const Representation& m) {
    std::vector<size_t> off;
    size_t acc = 0;
    for (size_t d : m.dims) {
        off.push_back(acc);
        acc += d;
    }
    return off;
}

RightModule rep_to_module(const Representation& m, AlgebraPtr incidence) {
    const Poset& p = *m.poset;
    auto pairs = incidence_basis_pairs(p);
    if (incidence->dim() != pairs.size() || !(incidence->field() == m.field))
        throw AlgebraMismatch("algebra does not match the incidence algebra of the poset");
    auto off = block_offsets(m);
    size_t total = m.total_dim();
    RightModule mod{incidence, total, {}};
    for (const auto& [x, y] : pairs) {
        Matrix rho(total, total, m.field);
        Matrix phi = m.composite(x, y);  // dims[x] × dims[y], column action M(y)→M(x)
        for (size_t i = 0; i < m.dims[y]; ++i)
            for (size_t j = 0; j < m.dims[x]; ++j) rho.at(off[y] + i, off[x] + j) = phi.at(j, i);
        mod.action.push_back(rho);
    }
    return mod;
}

Representation module_to_rep(const RightModule& n, PosetPtr p) {
    auto pairs = incidence_basis_pairs(*p);
    if (n.algebra->dim() != pairs.size())
        throw AlgebraMismatch("module is not over the incidence algebra of the poset");
    FieldSpec f = n.algebra->field();
    std::map<std::pair<size_t, size_t>, size_t> pair_index;
    for (size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = i;

    std::vector<Subspace> fibers;
    size_t dim_sum = 0;
    for (size_t x = 0; x < p->size(); ++x) {
        Subspace fx(n.dim, n.action[pair_index.at({x, x})]);
        dim_sum += fx.dim();
        fibers.push_back(std::move(fx));
    }
    if (dim_sum != n.dim)
        throw NotUnitalDecomposition("idempotent images do not decompose the module");

    Representation m{p, f, {}, {}};
    for (const auto& fx : fibers) m.dims.push_back(fx.dim());
    for (const auto& [x, y] : p->covers()) {
        const Matrix& rho = n.action[pair_index.at({x, y})];
        Matrix phi(m.dims[x], m.dims[y], f);
        for (size_t j = 0; j < m.dims[y]; ++j) {
            Vec w = row_times_matrix(fibers[y].basis().row(j), rho);
            auto coords = fibers[x].coordinates(w);
            if (!coords) throw std::logic_error("cover action leaves the fiber");
            for (size_t i = 0; i < m.dims[x]; ++i) phi.at(i, j) = (*coords)[i];
        }
        m.cover_maps[{x, y}] = phi;
    }
    return m;
}

Subspace hom_reps(const Representation& m, const Representation& n) {
    if (!(*m.poset == *n.poset) || !(m.field == n.field))
        throw AlgebraMismatch("hom of representations over different posets or fields");
    const Poset& p = *m.poset;
    size_t nvertex = p.size();
    std::vector<size_t> off(nvertex);
    size_t ambient = 0;
    for (size_t x = 0; x < nvertex; ++x) {
        off[x] = ambient;
        ambient += n.dims[x] * m.dims[x];
    }
    // Unknown blocks T_x (n.dims[x] × m.dims[x], column convention), row-major.
    std::vector<Vec> eqs;
    for (const auto& [x, y] : p.covers()) {
        const Matrix& phim = m.cover_map(x, y);
        const Matrix& phin = n.cover_map(x, y);
        for (size_t i = 0; i < n.dims[x]; ++i)
            for (size_t j = 0; j < m.dims[y]; ++j) {
                Vec eq = zero_vec(ambient, m.field);
                for (size_t k = 0; k < m.dims[x]; ++k)
                    eq[off[x] + i * m.dims[x] + k] += phim.at(k, j);
                for (size_t k = 0; k < n.dims[y]; ++k)
                    eq[off[y] + k * m.dims[y] + j] -= phin.at(i, k);
                eqs.push_back(std::move(eq));
            }
    }
    if (eqs.empty()) return Subspace::full(ambient, m.field);
    return nullspace(Matrix::from_rows(eqs, ambient, m.field));
}

std::vector<size_t> multiplicity_vector(const Representation& m) { return m.dims; }

namespace {

size_t position_in(const std::vector<size_t>& sorted_set, size_t x) {
    auto it = std::lower_bound(sorted_set.begin(), sorted_set.end(), x);
    if (it == sorted_set.end() || *it != x) throw UnknownElement("element not in subset");
    return static_cast<size_t>(it - sorted_set.begin());
}

std::vector<size_t> sorted_unique(std::vector<size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Offsets of the blocks of ⊕_{x∈u} M(x), u sorted.
std::vector<size_t> subset_offsets(const Representation& m, const std::vector<size_t>& u,
                                   size_t& total) {
    std::vector<size_t> off;
    total = 0;
    for (size_t x : u) {
        off.push_back(total);
        total += m.dims[x];
    }
    return off;
}

}  // namespace

SectionSpace sheaf_sections(const Representation& m, const std::vector<size_t>& u_in) {
    const Poset& p = *m.poset;
    auto u = sorted_unique(u_in);
    if (!p.is_down_closed(u)) throw NotOpen("subset is not downward closed");
    size_t total;
    auto off = subset_offsets(m, u, total);
    std::vector<Vec> eqs;
    for (const auto& [x, y] : p.covers()) {
        if (!std::binary_search(u.begin(), u.end(), x) ||
            !std::binary_search(u.begin(), u.end(), y))
            continue;
        size_t px = position_in(u, x), py = position_in(u, y);
        const Matrix& phi = m.cover_map(x, y);
        for (size_t i = 0; i < m.dims[x]; ++i) {
            Vec eq = zero_vec(total, m.field);
            for (size_t k = 0; k < m.dims[y]; ++k) eq[off[py] + k] += phi.at(i, k);
            eq[off[px] + i] -= Scalar::one(m.field);
            eqs.push_back(std::move(eq));
        }
    }
    Subspace sol = eqs.empty() ? Subspace::full(total, m.field)
                               : nullspace(Matrix::from_rows(eqs, total, m.field));
    return SectionSpace{sol.dim(), sol.basis()};
}

namespace {

// Restriction of a flattened section over `from` to the sub-family over `to`.
Vec restrict_section(const Representation& m, const std::vector<size_t>& from,
                     const std::vector<size_t>& to, const Vec& s) {
    size_t tf, tt;
    auto off_from = subset_offsets(m, from, tf);
    auto off_to = subset_offsets(m, to, tt);
    Vec out = zero_vec(tt, m.field);
    for (size_t i = 0; i < to.size(); ++i) {
        size_t pf = position_in(from, to[i]);
        for (size_t k = 0; k < m.dims[to[i]]; ++k) out[off_to[i] + k] = s[off_from[pf] + k];
    }
    return out;
}

}  // namespace

bool check_gluing(const Representation& m, const std::vector<size_t>& u_in,
                  const std::vector<size_t>& v_in) {
    auto u = sorted_unique(u_in), v = sorted_unique(v_in);
    std::vector<size_t> un = u, inter;
    un.insert(un.end(), v.begin(), v.end());
    un = sorted_unique(un);
    std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(inter));

    SectionSpace su = sheaf_sections(m, u);
    SectionSpace sv = sheaf_sections(m, v);
    SectionSpace suv = sheaf_sections(m, un);
    size_t inter_total;
    subset_offsets(m, inter, inter_total);

    // Fiber product dimension: pairs (a, b) agreeing on the intersection.
    size_t unknowns = su.dim + sv.dim;
    std::vector<Vec> eqs;
    for (size_t c = 0; c < inter_total; ++c) eqs.push_back(zero_vec(unknowns, m.field));
    for (size_t i = 0; i < su.dim; ++i) {
        Vec r = restrict_section(m, u, inter, su.basis.row(i));
        for (size_t c = 0; c < inter_total; ++c) eqs[c][i] += r[c];
    }
    for (size_t j = 0; j < sv.dim; ++j) {
        Vec r = restrict_section(m, v, inter, sv.basis.row(j));
        for (size_t c = 0; c < inter_total; ++c) eqs[c][su.dim + j] -= r[c];
    }
    size_t fiber_dim = unknowns;
    if (!eqs.empty())
        fiber_dim = nullspace(Matrix::from_rows(eqs, unknowns, m.field)).dim();
    if (fiber_dim != suv.dim) return false;

    // Restrictions of global sections must land in the local section spaces.
    Subspace span_u(su.basis.cols(), su.basis);
    Subspace span_v(sv.basis.cols(), sv.basis);
    for (size_t i = 0; i < suv.dim; ++i) {
        if (!span_u.contains(restrict_section(m, un, u, suv.basis.row(i)))) return false;
        if (!span_v.contains(restrict_section(m, un, v, suv.basis.row(i)))) return false;
    }
    return true;
}

}  // namespace incalg

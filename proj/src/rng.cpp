#include "incalg/rng.hpp"

#include <algorithm>

namespace incalg {

namespace {

uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(uint64_t seed) {
    for (auto& s : s_) s = splitmix64(seed);
}

uint64_t Rng::next() {
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

uint64_t Rng::below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

Scalar Rng::scalar(FieldSpec f, long max_abs) {
    if (!f.is_rational()) return Scalar(f, static_cast<long>(below(f.characteristic)));
    long span = 2 * max_abs + 1;
    return Scalar(f, static_cast<long>(below(static_cast<uint64_t>(span))) - max_abs);
}

Scalar Rng::nonzero_scalar(FieldSpec f, long max_abs) {
    Scalar s = scalar(f, max_abs);
    while (s.is_zero()) s = scalar(f, max_abs);
    return s;
}

Poset random_poset(Rng& rng, size_t n, unsigned density_percent) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    // Random topological order; forward edges only, so the closure is acyclic.
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    for (size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<std::pair<std::string, std::string>> gens;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (rng.below(100) < density_percent)
                gens.push_back({labels[order[i]], labels[order[j]]});
    return Poset::from_generators(labels, gens);
}

Matrix random_matrix(Rng& rng, size_t rows, size_t cols, FieldSpec f, long max_abs) {
    Matrix m(rows, cols, f);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(f, max_abs);
    return m;
}

Matrix random_invertible(Rng& rng, size_t n, FieldSpec f, long max_abs) {
    while (true) {
        Matrix m = random_matrix(rng, n, n, f, max_abs);
        if (rank(m) == n) return m;
    }
}

Representation random_rep(Rng& rng, PosetPtr p, FieldSpec f, size_t max_dim) {
    // Direct sum of projective and simple representations, then a random
    // change of basis at every fiber; path independence is preserved.
    Representation m{p, f, std::vector<size_t>(p->size(), 0), {}};
    for (const auto& [u, v] : p->covers()) m.cover_maps[{u, v}] = Matrix(0, 0, f);
    bool nonempty = false;
    for (size_t x = 0; x < p->size(); ++x) {
        for (size_t c = rng.below(max_dim + 1); c > 0; --c) {
            m = direct_sum(m, rng.below(2) ? projective_rep(p, f, x) : simple_rep(p, f, x));
            nonempty = true;
        }
    }
    if (!nonempty) m = direct_sum(m, canonical_rep(p, f));
    std::vector<Matrix> g, ginv;
    for (size_t x = 0; x < p->size(); ++x) {
        Matrix gx = m.dims[x] == 0 ? Matrix(0, 0, f) : random_invertible(rng, m.dims[x], f, 2);
        Matrix inv =
            m.dims[x] == 0 ? Matrix(0, 0, f) : *solve(gx, Matrix::identity(m.dims[x], f));
        g.push_back(gx);
        ginv.push_back(inv);
    }
    for (auto& [key, phi] : m.cover_maps) phi = g[key.first] * phi * ginv[key.second];
    return m;
}

}  // namespace incalg

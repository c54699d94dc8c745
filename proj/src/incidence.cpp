#include "incalg/incidence.hpp"

#include <array>

namespace incalg {

void TwoCocycle::set(size_t x, size_t y, size_t z, const Scalar& value) {
    if (!poset_->less(x, y) || !poset_->less(y, z))
        throw InvalidCocycle("cocycle value on a non-chain triple");
    if (value.is_zero()) throw InvalidCocycle("cocycle values must be nonzero");
    values_[{x, y, z}] = value;
}

Scalar TwoCocycle::at(size_t x, size_t y, size_t z) const {
    auto it = values_.find({x, y, z});
    if (it != values_.end()) return it->second;
    return Scalar::one(field_);
}

std::optional<std::array<size_t, 4>> cocycle_violation(const TwoCocycle& c) {
    const Poset& p = *c.poset();
    for (const auto& ch : p.chains(3)) {
        size_t x = ch[0], y = ch[1], z = ch[2], w = ch[3];
        if (c.at(y, z, w) * c.at(x, y, w) != c.at(x, y, z) * c.at(x, z, w))
            return std::array<size_t, 4>{x, y, z, w};
    }
    return std::nullopt;
}

std::vector<std::pair<size_t, size_t>> incidence_basis_pairs(const Poset& p) {
    return p.comparable_pairs();
}

namespace {

Algebra build_incidence(const Poset& p, FieldSpec f, const TwoCocycle* twist) {
    auto pairs = incidence_basis_pairs(p);
    std::map<std::pair<size_t, size_t>, size_t> index;
    std::vector<std::string> labels;
    for (size_t i = 0; i < pairs.size(); ++i) {
        index[pairs[i]] = i;
        labels.push_back("a[" + p.label(pairs[i].first) + "," + p.label(pairs[i].second) + "]");
    }
    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> constants;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        for (size_t j = 0; j < pairs.size(); ++j) {
            auto [v, w] = pairs[j];
            if (w != x) continue;  // a_{xy}·a_{vw} = δ_{wx}·a_{vy}
            Scalar coef = Scalar::one(f);
            if (twist && v != x && x != y) coef = twist->at(v, x, y);
            constants.emplace_back(i, j, index.at({v, y}), coef);
        }
    }
    Vec unit = zero_vec(pairs.size(), f);
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i].second) unit[i] = Scalar::one(f);
    return Algebra(f, labels, constants, unit);
}

}  // namespace

Algebra incidence_algebra(const Poset& p, FieldSpec f) { return build_incidence(p, f, nullptr); }

Algebra twisted_incidence(const Poset& p, FieldSpec f, const TwoCocycle& c) {
    if (auto bad = cocycle_violation(c))
        throw InvalidCocycle("cocycle law fails on chain starting at " + p.label((*bad)[0]));
    return build_incidence(p, f, &c);
}

Subspace incidence_radical(const Poset& p, FieldSpec f) {
    auto pairs = incidence_basis_pairs(p);
    std::vector<Vec> rows;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first == pairs[i].second) continue;
        Vec v = zero_vec(pairs.size(), f);
        v[i] = Scalar::one(f);
        rows.push_back(std::move(v));
    }
    return Subspace(pairs.size(), Matrix::from_rows(rows, pairs.size(), f));
}

}  // namespace incalg

#pragma once

#include <array>
#include <map>

#include "incalg/algebra.hpp"
#include "incalg/poset.hpp"

namespace incalg {

using PosetPtr = std::shared_ptr<const Poset>;

/// Multiplicative 2-cocycle on the order complex, stored on strict 2-chains
/// x<y<z and extended by 1 on degenerate chains.
class TwoCocycle {
public:
    TwoCocycle(PosetPtr poset, FieldSpec field) : poset_(std::move(poset)), field_(field) {}

    static TwoCocycle ones(PosetPtr poset, FieldSpec field) { return TwoCocycle(poset, field); }

    const PosetPtr& poset() const { return poset_; }
    const FieldSpec& field() const { return field_; }

    /// Value on a strict 2-chain; setting requires x<y<z and a nonzero value.
    void set(size_t x, size_t y, size_t z, const Scalar& value);
    Scalar at(size_t x, size_t y, size_t z) const;

    const std::map<std::array<size_t, 3>, Scalar>& values() const { return values_; }

private:
    PosetPtr poset_;
    FieldSpec field_;
    std::map<std::array<size_t, 3>, Scalar> values_;
};

/// Cocycle law check: nullopt when valid, otherwise the first failing 3-chain.
std::optional<std::array<size_t, 4>> cocycle_violation(const TwoCocycle& c);
inline bool is_cocycle(const TwoCocycle& c) { return !cocycle_violation(c).has_value(); }

/// Basis labels "a[x,y]" for comparable pairs, lexicographic in indices.
Algebra incidence_algebra(const Poset& p, FieldSpec f);

/// Twist of the incidence product: a_{yz}·a_{xy} = c(x,y,z)·a_{xz}.
Algebra twisted_incidence(const Poset& p, FieldSpec f, const TwoCocycle& c);

/// The comparable pairs indexing the incidence algebra basis.
std::vector<std::pair<size_t, size_t>> incidence_basis_pairs(const Poset& p);

/// span{a_{xy} : x<y} — the radical of KP, valid in every characteristic.
Subspace incidence_radical(const Poset& p, FieldSpec f);

}  // namespace incalg

#pragma once

#include "incalg/incidence.hpp"

namespace incalg::testutil {

/// For a frame of KP, maps each frame index to the poset element whose
/// diagonal idempotent a_{xx} it lifts (unique primitive class per element).
inline std::vector<size_t> frame_to_elements(const Poset& p, const IdempotentFrame& f) {
    auto pairs = incidence_basis_pairs(p);
    std::vector<size_t> diag_index(p.size());
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i].second) diag_index[pairs[i].first] = i;
    std::vector<size_t> out;
    for (const auto& e : f.idempotents) {
        size_t hit = p.size();
        for (size_t x = 0; x < p.size(); ++x)
            if (e[diag_index[x]].is_one()) {
                if (hit != p.size()) throw std::logic_error("idempotent not primitive");
                hit = x;
            }
        if (hit == p.size()) throw std::logic_error("idempotent misses the diagonal");
        out.push_back(hit);
    }
    return out;
}

/// Exact equality of the ext-quiver of KP with hasse(P), after identifying
/// frame vertices with poset elements.
inline bool ext_quiver_equals_hasse(const Poset& p, const Algebra& kp,
                                    const IdempotentFrame& f, const Quiver& ext) {
    auto elem = frame_to_elements(p, f);
    Quiver h = p.hasse();
    if (ext.arrows.size() != h.arrows.size()) return false;
    for (const auto& a : ext.arrows) {
        bool found = false;
        for (const auto& b : h.arrows)
            if (b.source == elem[a.source] && b.target == elem[a.target] &&
                b.multiplicity == a.multiplicity)
                found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace incalg::testutil

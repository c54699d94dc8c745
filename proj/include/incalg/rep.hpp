#pragma once

#include "incalg/incidence.hpp"

namespace incalg {

/// Contravariant representation of a poset: a space M(x) per element and a map
/// M(y) → M(x) per Hasse cover x ⋖ y, stored as a dim(x)×dim(y) matrix acting
/// on column vectors.
struct Representation {
    PosetPtr poset;
    FieldSpec field;
    std::vector<size_t> dims;                             // per element
    std::map<std::pair<size_t, size_t>, Matrix> cover_maps;  // key (x,y) with x ⋖ y

    const Matrix& cover_map(size_t x, size_t y) const;
    /// Composite map M(y) → M(x) along any Hasse path (x = y gives identity).
    Matrix composite(size_t x, size_t y) const;
    size_t total_dim() const;
};

struct RepViolation {
    size_t x, y;
    std::vector<size_t> path1, path2;  // two cover paths with different composites
};

/// Path-independence check over all comparable pairs.
std::optional<RepViolation> verify_rep(const Representation& m);

Representation simple_rep(PosetPtr p, FieldSpec f, size_t x);
Representation canonical_rep(PosetPtr p, FieldSpec f);
Representation projective_rep(PosetPtr p, FieldSpec f, size_t x);
Representation direct_sum(const Representation& m, const Representation& n);

/// Block offsets of ⊕_x M(x) in element order.
std::vector<size_t> block_offsets(const Representation& m);

/// The equivalence rep(P,K) → mod KP on objects.
RightModule rep_to_module(const Representation& m, AlgebraPtr incidence);

/// Quasi-inverse: N(x) = image of ρ(a_{xx}); maps by right multiplication.
Representation module_to_rep(const RightModule& n, PosetPtr p);

/// Natural transformations as a subspace of ⊕_x Hom(M(x), N(x)), flattened
/// blockwise in element order (row-major within each block).
Subspace hom_reps(const Representation& m, const Representation& n);

std::vector<size_t> multiplicity_vector(const Representation& m);

struct SectionSpace {
    size_t dim;
    Matrix basis;  // rows = compatible families, flattened over u in index order
};

/// Sections over a downward closed subset: families (s_x) with φ(s_y) = s_x.
SectionSpace sheaf_sections(const Representation& m, const std::vector<size_t>& u);

/// Sheaf gluing for the open cover {u, v}: sections(u∪v) is the fiber product
/// of sections(u) and sections(v) over sections(u∩v).
bool check_gluing(const Representation& m, const std::vector<size_t>& u,
                  const std::vector<size_t>& v);

}  // namespace incalg

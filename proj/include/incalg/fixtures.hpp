#pragma once

#include "incalg/cohomology.hpp"

namespace incalg {
namespace fixtures {

/// K[eps]/(eps^2): basis {1, eps}.
Algebra dual_numbers(FieldSpec f);

/// Path algebra of x --a--> y --b--> z modulo ba = 0: basis {ex, ey, ez, a, b}.
Algebra a3_with_relation(FieldSpec f);

/// The rational form of the triangular algebra [[Q(i), 0], [M, Q(i)]] with
/// M = Q(i)u + Q(i)v, where the right Q(i)-action is untwisted on u and
/// conjugation-twisted on v. Basis {E1, I1, E2, I2, U, IU, V, IV}.
Algebra ringel_qform();

/// Face poset of the boundary of the 3-simplex (14 elements, ordered by
/// inclusion; labels are vertex strings like "134").
Poset boundary_tetra();

/// A 2-cocycle on boundary_tetra() representing lambda times a generator of
/// the free part of H^2 (multiplicatively: values lambda^z).
TwoCocycle boundary_tetra_cocycle(PosetPtr p, const Scalar& lambda);

}  // namespace fixtures
}  // namespace incalg

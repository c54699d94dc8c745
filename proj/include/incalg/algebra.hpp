#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "incalg/matrix.hpp"
#include "incalg/poset.hpp"

namespace incalg {

/// Finite-dimensional associative unital algebra given by structure constants:
/// b_i · b_j = Σ_k c_{ij}^k b_k.
class Algebra {
public:
    Algebra(FieldSpec field, std::vector<std::string> basis_labels,
            const std::vector<std::tuple<size_t, size_t, size_t, Scalar>>& constants, Vec unit);

    const FieldSpec& field() const { return field_; }
    size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const Scalar& structure(size_t i, size_t j, size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    Vec basis_element(size_t i) const;
    Vec mult(const Vec& a, const Vec& b) const;
    /// Row-convention matrix of x ↦ a·x (so (a·x) = x · left_mult(a)).
    Matrix left_mult(const Vec& a) const;
    /// Row-convention matrix of x ↦ x·a.
    Matrix right_mult(const Vec& a) const;

private:
    FieldSpec field_;
    size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Scalar> c_;
    Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraViolation {
    std::string kind;  // "associativity" | "left-unit" | "right-unit"
    size_t i = 0, j = 0, k = 0;
};

/// Checks all associativity triples and unit laws; nullopt when the algebra is valid.
std::optional<AlgebraViolation> verify_algebra(const Algebra& a);

/// Solution space of z·b_i = b_i·z for all i; contains the unit.
Subspace centre_basis(const Algebra& a);

/// Radical of the trace form; equals the Jacobson radical in characteristic 0
/// or p > dim. Other characteristics are rejected.
Subspace jacobson_radical(const Algebra& a);

/// J ⊇ J² ⊇ ... down to 0 (the zero term included).
std::vector<Subspace> radical_powers(const Algebra& a, const Subspace& j);

struct IdempotentFrame {
    std::vector<Vec> idempotents;
};

struct NotSplitBasic {
    std::string reason;
    Vec witness;                      // element whose behaviour blocks splitting
    std::vector<Scalar> polynomial;   // its minimal polynomial (monic), when relevant
};

using FrameResult = std::variant<IdempotentFrame, NotSplitBasic>;

/// Lifts a complete set of orthogonal primitive idempotents, or reports that
/// A/J is not split commutative semisimple over the base field.
FrameResult idempotent_frame(const Algebra& a);

/// d[x][y] = dim e_y·A·e_x.
std::vector<std::vector<size_t>> peirce_dims(const Algebra& a, const IdempotentFrame& f);
Subspace peirce_subspace(const Algebra& a, const IdempotentFrame& f, size_t x, size_t y);

/// Arrow u→v with multiplicity dim e_v(J/J²)e_u; vertices labeled x0, x1, ...
Quiver ext_quiver(const Algebra& a, const IdempotentFrame& f);

/// Right module over an algebra, row-vector convention: m · act(b).
struct RightModule {
    AlgebraPtr algebra;
    size_t dim = 0;
    std::vector<Matrix> action;  // one dim×dim matrix per algebra basis element

    Matrix act(const Vec& algebra_element) const;
};

struct ModuleViolation {
    std::string kind;  // "unit" | "multiplicativity"
    size_t i = 0, j = 0;
};

std::optional<ModuleViolation> verify_module(const RightModule& m);

RightModule zero_module(AlgebraPtr a);
RightModule regular_module(AlgebraPtr a);
RightModule direct_sum(const RightModule& m, const RightModule& n);

/// The right module e_x·A with action by right multiplication.
RightModule projective_module(AlgebraPtr a, const IdempotentFrame& f, size_t x);

/// All φ with act_m(b)·φ = φ·act_n(b); ambient dim(m)·dim(n), row-major flattening.
Subspace hom_modules(const RightModule& m, const RightModule& n);
Matrix hom_element_to_matrix(const RightModule& m, const RightModule& n, const Vec& flat);

/// rank of act(e_x) = [M : S_x] for a split basic frame.
size_t multiplicity(const RightModule& m, const IdempotentFrame& f, size_t x);

/// M ⊇ MJ ⊇ MJ² ⊇ ... ⊇ 0.
std::vector<Subspace> radical_series(const RightModule& m, const Subspace& j);

/// {a : M·a = 0} as a subspace of the algebra.
Subspace annihilator(const RightModule& m);

/// All action-invariant subspaces over F_p; throws EnumerationTooLarge when
/// p^dim exceeds the bound.
std::vector<Subspace> submodule_lattice(const RightModule& m, size_t vector_bound = 1 << 16);

bool is_distributive_lattice(const std::vector<Subspace>& lattice);
bool is_distributive_module(const RightModule& m, size_t vector_bound = 1 << 16);

/// Witness (N1 ⊆ N2) with N2/N1 ≅ S_x ⊕ S_x, if one exists.
std::optional<std::pair<Subspace, Subspace>> has_square_subquotient(
    const RightModule& m, const IdempotentFrame& f, size_t x, size_t vector_bound = 1 << 16);

bool is_multiplicity_free(const RightModule& m, const IdempotentFrame& f);

/// Algebra structure induced on a multiplicatively closed subspace containing unit.
Algebra subalgebra_on(const Algebra& a, const Subspace& s, const Vec& unit,
                      const std::string& label_prefix = "b");

/// Same algebra expressed in the basis given by the rows of invertible T.
Algebra change_basis(const Algebra& a, const Matrix& t);

}  // namespace incalg

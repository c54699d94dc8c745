#pragma once

#include "incalg/cohomology.hpp"
#include "incalg/rep.hpp"

namespace incalg {

// Failure certificates, one per violated condition of the recognition theorem.
struct CycleInExtQuiver {
    std::vector<size_t> cycle;  // frame vertex indices along an oriented cycle
};
struct CentreTooLarge {
    size_t dim;
};
struct PeirceMultiplicity {
    size_t x, y, dim;
};
struct TransitivityFailure {
    size_t x, y, z;
};
struct ZeroComposite {
    size_t x, y, z;
};
struct CocycleObstruction {
    Obstruction obstruction;
};

using FailureCertificate = std::variant<NotSplitBasic, CycleInExtQuiver, CentreTooLarge,
                                        PeirceMultiplicity, TransitivityFailure, ZeroComposite,
                                        CocycleObstruction>;

std::string certificate_kind(const FailureCertificate& c);

/// Verdict for one connected block of the input algebra.
struct BlockReport {
    std::vector<size_t> frame_vertices;  // indices into the global frame
    std::optional<bool> cond1, cond2, cond3;
    std::optional<Poset> poset;
    /// On success: row r holds, in the coordinates of the input algebra, the
    /// element mapped to the r-th basis element a_{xy} of incidence_algebra(poset).
    std::optional<Matrix> iso_rows;
    Vec block_unit;
    std::optional<FailureCertificate> certificate;

    bool success() const {
        return cond1.value_or(false) && cond2.value_or(false) && cond3.value_or(false);
    }
};

struct RecognitionReport {
    bool connected = true;
    std::vector<BlockReport> blocks;

    bool all_success() const {
        for (const auto& b : blocks)
            if (!b.success()) return false;
        return !blocks.empty();
    }
};

/// The recognition pipeline; aborts a block at its first failing condition.
RecognitionReport recognize(const Algebra& a);

/// Same sub-computations, but every condition is evaluated when possible.
RecognitionReport conditions_report(const Algebra& a);

/// Exact check that the mapping (row r of iso_rows) ↦ (basis r of KP(poset))
/// is an algebra isomorphism from the block with unit block_unit onto KP.
bool verify_iso(const Algebra& source, const Vec& block_unit, const Poset& poset,
                const Matrix& iso_rows);

struct Condition3Witness {
    bool ok = false;
    std::optional<size_t> bad_multiplicity_x;  // multiplicity(m, x) ≠ 1
    std::optional<size_t> no_embedding_x;      // no injective e_xA → m
};

/// Constructive condition (3) check: m is multiplicity free with every
/// indecomposable projective embedding into it.
Condition3Witness check_condition3_with(const Algebra& a, const IdempotentFrame& f,
                                        const RightModule& m);

}  // namespace incalg

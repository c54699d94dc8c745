#include "incalg/recognize.hpp"

#include <algorithm>

namespace incalg {

std::string certificate_kind(const FailureCertificate& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NotSplitBasic>) return "NotSplitBasic";
            else if constexpr (std::is_same_v<T, CycleInExtQuiver>) return "CycleInExtQuiver";
            else if constexpr (std::is_same_v<T, CentreTooLarge>) return "CentreTooLarge";
            else if constexpr (std::is_same_v<T, PeirceMultiplicity>) return "PeirceMultiplicity";
            else if constexpr (std::is_same_v<T, TransitivityFailure>) return "TransitivityFailure";
            else if constexpr (std::is_same_v<T, ZeroComposite>) return "ZeroComposite";
            else return "CocycleObstruction";
        },
        c);
}

namespace {

struct BlockData {
    std::vector<size_t> vertices;   // global frame indices, ascending
    Subspace span;                  // of the ambient algebra
    Algebra algebra;                // structure on the block basis
    IdempotentFrame frame;          // block-local coordinates of the e_x
    Vec unit;                       // ambient coordinates of Σ e_x
};

Vec lift_to_ambient(const Subspace& span, const Vec& local) {
    Vec out = zero_vec(span.ambient_dim(), span.field());
    for (size_t i = 0; i < span.dim(); ++i)
        out = add_vec(out, scale_vec(local[i], span.basis().row(i)));
    return out;
}

BlockData make_block(const Algebra& a, const IdempotentFrame& f,
                     const std::vector<size_t>& vertices) {
    Vec e = zero_vec(a.dim(), a.field());
    for (size_t x : vertices) e = add_vec(e, f.idempotents[x]);
    std::vector<Vec> spanning;
    for (size_t i = 0; i < a.dim(); ++i)
        spanning.push_back(a.mult(e, a.mult(a.basis_element(i), e)));
    Subspace span(a.dim(), Matrix::from_rows(spanning, a.dim(), a.field()));
    Algebra blk = subalgebra_on(a, span, e);
    IdempotentFrame bf;
    for (size_t x : vertices) {
        auto coords = span.coordinates(f.idempotents[x]);
        if (!coords) throw std::logic_error("frame idempotent escapes its block");
        bf.idempotents.push_back(*coords);
    }
    return BlockData{vertices, std::move(span), std::move(blk), std::move(bf), std::move(e)};
}

// Runs pipeline steps (iv)-(vii) on one block; fills cond3/poset/iso_rows or a
// certificate. The poset and isomorphism are only produced when the block's
// ext-quiver is acyclic (expect_iso), where the Peirce decomposition is forced
// to exhaust the block.
void run_block_structure(const BlockData& blk, BlockReport& rep, bool expect_iso) {
    const Algebra& b = blk.algebra;
    size_t n = blk.frame.idempotents.size();
    auto d = peirce_dims(b, blk.frame);

    // (iv) Peirce dimensions at most 1 off the diagonal.
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (x != y && d[x][y] > 1) {
                rep.cond3 = false;
                rep.certificate = PeirceMultiplicity{x, y, d[x][y]};
                return;
            }

    // (v) The relation x ≤ y ⟺ e_y·A·e_x ≠ 0 must be a partial order.
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) leq[x][y] = x == y || d[x][y] >= 1;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z)
                if (leq[x][y] && leq[y][z] && !leq[x][z]) {
                    rep.cond3 = false;
                    rep.certificate = TransitivityFailure{x, y, z};
                    return;
                }
    std::vector<std::string> labels;
    for (size_t x = 0; x < n; ++x) labels.push_back("x" + std::to_string(x));
    Poset p = Poset::from_relation(labels, leq);

    // (vi) Pick basis vectors u_xy of the one-dimensional Peirce spaces and
    // read off the structure cocycle from composites.
    std::map<std::pair<size_t, size_t>, Vec> u;
    for (size_t x = 0; x < n; ++x) u[{x, x}] = blk.frame.idempotents[x];
    for (const auto& [x, y] : p.strict_pairs())
        u[{x, y}] = peirce_subspace(b, blk.frame, x, y).basis().row(0);
    auto pp = std::make_shared<const Poset>(p);
    TwoCocycle c(pp, b.field());
    for (const auto& ch : p.chains(2)) {
        size_t x = ch[0], y = ch[1], z = ch[2];
        Vec w = b.mult(u.at({y, z}), u.at({x, y}));
        if (is_zero_vec(w)) {
            rep.cond3 = false;
            rep.certificate = ZeroComposite{x, y, z};
            return;
        }
        const Vec& base = u.at({x, z});
        size_t k = 0;
        while (base[k].is_zero()) ++k;
        Scalar val = w[k] / base[k];
        if (!(scale_vec(val, base) == w)) throw std::logic_error("Peirce space not 1-dimensional");
        c.set(x, y, z, val);
    }
    if (!is_cocycle(c)) throw std::logic_error("associativity must yield a cocycle");

    // (vii) Trivialize and normalize: e_xy = u_xy / f(x,y).
    TrivializeResult tr = trivialize(p, c);
    if (std::holds_alternative<Obstruction>(tr)) {
        rep.cond3 = false;
        rep.certificate = CocycleObstruction{std::get<Obstruction>(tr)};
        return;
    }
    const Gauge& g = std::get<Gauge>(tr);
    rep.cond3 = true;
    if (!expect_iso) return;
    auto pairs = p.comparable_pairs();
    if (pairs.size() != b.dim()) throw std::logic_error("Peirce decomposition dimension mismatch");
    std::vector<Vec> rows;
    for (const auto& [x, y] : pairs) {
        Vec exy = u.at({x, y});
        if (x != y) exy = scale_vec(g.at(x, y).inverse(), exy);
        rows.push_back(lift_to_ambient(blk.span, exy));
    }
    rep.poset = std::move(p);
    rep.iso_rows = Matrix::from_rows(rows, blk.span.ambient_dim(), b.field());
}

}  // namespace

static RecognitionReport run(const Algebra& a, bool abort_early) {
    RecognitionReport report;
    Subspace j = jacobson_radical(a);
    FrameResult fr = idempotent_frame(a);
    if (std::holds_alternative<NotSplitBasic>(fr)) {
        BlockReport blk;
        blk.cond2 = false;
        blk.certificate = std::get<NotSplitBasic>(fr);
        blk.block_unit = a.unit();
        report.blocks.push_back(std::move(blk));
        return report;
    }
    const IdempotentFrame& frame = std::get<IdempotentFrame>(fr);
    Quiver q = ext_quiver(a, frame);

    auto comp = q.component_ids();
    size_t ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    report.connected = ncomp <= 1;

    auto cycle = q.find_cycle();
    if (!cycle.empty() && abort_early) {
        BlockReport blk;
        for (size_t x = 0; x < frame.idempotents.size(); ++x) blk.frame_vertices.push_back(x);
        blk.cond1 = false;
        blk.certificate = CycleInExtQuiver{cycle};
        blk.block_unit = a.unit();
        report.blocks.push_back(std::move(blk));
        return report;
    }

    for (size_t ci = 0; ci < ncomp; ++ci) {
        std::vector<size_t> vertices;
        for (size_t x = 0; x < comp.size(); ++x)
            if (comp[x] == ci) vertices.push_back(x);
        BlockData data = make_block(a, frame, vertices);
        BlockReport blk;
        blk.frame_vertices = vertices;
        blk.block_unit = data.unit;
        blk.cond2 = true;  // split basic established by the frame

        // Acyclicity, restricted to this block's vertices.
        std::vector<size_t> local_of(comp.size(), 0);
        for (size_t i = 0; i < vertices.size(); ++i) local_of[vertices[i]] = i;
        Quiver sub;
        for (size_t x : vertices) sub.vertices.push_back(q.vertices[x]);
        for (const auto& arr : q.arrows)
            if (comp[arr.source] == ci)
                sub.arrows.push_back({local_of[arr.source], local_of[arr.target],
                                      arr.multiplicity});
        auto block_cycle = sub.find_cycle();
        blk.cond1 = block_cycle.empty();
        if (!block_cycle.empty()) {
            std::vector<size_t> global_cycle;
            for (size_t v : block_cycle) global_cycle.push_back(vertices[v]);
            blk.certificate = CycleInExtQuiver{std::move(global_cycle)};
            if (abort_early) {
                report.blocks.push_back(std::move(blk));
                continue;
            }
        }

        // (ii) Centre of a connected block must be one-dimensional. Meaningful
        // only once the block is acyclic; a cyclic block can be commutative
        // while every simple still has scalar endomorphisms.
        if (blk.cond1 == true) {
            size_t zdim = centre_basis(data.algebra).dim();
            if (zdim != 1) {
                blk.cond2 = false;
                blk.certificate = CentreTooLarge{zdim};
                if (abort_early) {
                    report.blocks.push_back(std::move(blk));
                    continue;
                }
            }
        }

        run_block_structure(data, blk, blk.cond1 == true && blk.cond2 == true);
        report.blocks.push_back(std::move(blk));
    }
    return report;
}

RecognitionReport recognize(const Algebra& a) { return run(a, true); }

RecognitionReport conditions_report(const Algebra& a) { return run(a, false); }

bool verify_iso(const Algebra& source, const Vec& block_unit, const Poset& poset,
                const Matrix& iso_rows) {
    Algebra target = incidence_algebra(poset, source.field());
    if (iso_rows.rows() != target.dim() || iso_rows.cols() != source.dim()) return false;
    if (rank(iso_rows) != target.dim()) return false;
    auto pairs = incidence_basis_pairs(poset);
    // Unit: the diagonal pairs must sum to the block unit.
    Vec diag_sum = zero_vec(source.dim(), source.field());
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i].second) diag_sum = add_vec(diag_sum, iso_rows.row(i));
    if (!(diag_sum == block_unit)) return false;
    // Multiplicativity on every basis pair.
    for (size_t i = 0; i < target.dim(); ++i)
        for (size_t j = 0; j < target.dim(); ++j) {
            Vec lhs = source.mult(iso_rows.row(i), iso_rows.row(j));
            Vec rhs = zero_vec(source.dim(), source.field());
            for (size_t k = 0; k < target.dim(); ++k) {
                const Scalar& ck = target.structure(i, j, k);
                if (!ck.is_zero()) rhs = add_vec(rhs, scale_vec(ck, iso_rows.row(k)));
            }
            if (!(lhs == rhs)) return false;
        }
    return true;
}

Condition3Witness check_condition3_with(const Algebra& a, const IdempotentFrame& f,
                                        const RightModule& m) {
    Condition3Witness w;
    for (size_t x = 0; x < f.idempotents.size(); ++x) {
        if (multiplicity(m, f, x) != 1) {
            w.bad_multiplicity_x = x;
            return w;
        }
    }
    auto ap = m.algebra;
    for (size_t x = 0; x < f.idempotents.size(); ++x) {
        RightModule px = projective_module(ap, f, x);
        Subspace homs = hom_modules(px, m);
        bool embeds = false;
        for (size_t i = 0; i < homs.dim() && !embeds; ++i) {
            Matrix phi = hom_element_to_matrix(px, m, homs.basis().row(i));
            embeds = rank(phi) == px.dim;
        }
        if (!embeds) {
            w.no_embedding_x = x;
            return w;
        }
    }
    w.ok = true;
    return w;
}

}  // namespace incalg

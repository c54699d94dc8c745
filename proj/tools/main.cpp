#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "incalg/fixtures.hpp"
#include "incalg/json_io.hpp"
#include "incalg/rng.hpp"

using namespace incalg;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;      // valid certificate / property fails
constexpr int kInputError = 2;    // malformed input
constexpr int kUnsupported = 3;   // characteristic or bound limits

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

FieldSpec parse_field(const std::string& text) {
    if (text == "q" || text == "Q" || text == "0") return FieldSpec{0};
    FieldSpec f{std::stoul(text)};
    f.validate();
    return f;
}

/// Recovers the poset of an incidence algebra from basis labels "a[x,y]".
Poset poset_from_incidence_labels(const Algebra& a) {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> gens;
    for (const auto& label : a.basis_labels()) {
        if (label.size() < 5 || label.substr(0, 2) != "a[" || label.back() != ']')
            throw ParseError("module algebra basis is not in incidence form a[x,y]");
        auto comma = label.find(',');
        if (comma == std::string::npos) throw ParseError("bad incidence label " + label);
        std::string x = label.substr(2, comma - 2);
        std::string y = label.substr(comma + 1, label.size() - comma - 2);
        if (x == y)
            elements.push_back(x);
        else
            gens.push_back({x, y});
    }
    return Poset::from_generators(elements, gens);
}

int corpus_roundtrip(uint64_t seed) {
    json cases = json::array();
    bool all = true;
    for (size_t i = 0; i < 10; ++i) {
        Rng rng(seed + i);
        Poset p = random_poset(rng, 2 + rng.below(4));
        // One verified block per component; keep the check simple by drawing
        // connected posets only.
        for (int guard = 0; !p.is_connected() && guard < 100; ++guard)
            p = random_poset(rng, 2 + rng.below(4));
        Algebra kp = incidence_algebra(p, FieldSpec{0});
        RecognitionReport rep = recognize(kp);
        bool ok = rep.all_success() && rep.blocks.size() == 1 && rep.blocks[0].poset &&
                  poset_isomorphism(*rep.blocks[0].poset, p).has_value() &&
                  verify_iso(kp, kp.unit(), *rep.blocks[0].poset, *rep.blocks[0].iso_rows);
        cases.push_back({{"index", i}, {"name", "roundtrip"}, {"pass", ok}});
        all = all && ok;
    }
    emit(json{{"cases", cases}, {"all_pass", all}}, "");
    return all ? kOk : kNegative;
}

int corpus_counterexamples() {
    json cases = json::array();
    bool all = true;
    auto add = [&](const std::string& name, bool ok) {
        cases.push_back({{"index", cases.size()}, {"name", name}, {"pass", ok}});
        all = all && ok;
    };
    FieldSpec q{0};
    {
        RecognitionReport r = conditions_report(fixtures::dual_numbers(q));
        add("dual-numbers", r.blocks.size() == 1 && r.blocks[0].cond1 == false &&
                                r.blocks[0].cond2 == true && r.blocks[0].cond3 == true);
    }
    {
        RecognitionReport r = recognize(fixtures::ringel_qform());
        add("ringel", r.blocks.size() == 1 && r.blocks[0].cond2 == false &&
                          r.blocks[0].certificate &&
                          certificate_kind(*r.blocks[0].certificate) == "NotSplitBasic");
    }
    {
        RecognitionReport r = recognize(fixtures::a3_with_relation(q));
        bool ok = r.blocks.size() == 1 && r.blocks[0].certificate &&
                  certificate_kind(*r.blocks[0].certificate) == "TransitivityFailure";
        add("a3-relation", ok);
    }
    {
        auto p = std::make_shared<const Poset>(fixtures::boundary_tetra());
        TwoCocycle c = fixtures::boundary_tetra_cocycle(p, Scalar(q, 2));
        RecognitionReport r = recognize(twisted_incidence(*p, q, c));
        bool ok = r.blocks.size() == 1 && r.blocks[0].certificate &&
                  certificate_kind(*r.blocks[0].certificate) == "CocycleObstruction";
        add("boundary-tetra-twist", ok);
    }
    emit(json{{"cases", cases}, {"all_pass", all}}, "");
    return all ? kOk : kNegative;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Incidence-algebra recognition toolkit"};
    app.require_subcommand(1);
    std::string in1, in2, out_path, field_text = "q", open_text, suite = "roundtrip";
    uint64_t seed = 0;
    size_t size = 4;
    app.add_option("-o,--output", out_path, "write JSON here instead of stdout");

    auto* c_rec = app.add_subcommand("recognize", "run the recognition pipeline");
    c_rec->add_option("algebra", in1)->required();
    auto* c_cond = app.add_subcommand("conditions", "evaluate all three conditions");
    c_cond->add_option("algebra", in1)->required();
    auto* c_mk = app.add_subcommand("make-incidence", "incidence algebra of a poset");
    c_mk->add_option("poset", in1)->required();
    c_mk->add_option("--field", field_text);
    auto* c_tw = app.add_subcommand("twist", "cocycle-twisted incidence algebra");
    c_tw->add_option("poset", in1)->required();
    c_tw->add_option("cocycle", in2)->required();
    c_tw->add_option("--field", field_text);
    auto* c_ext = app.add_subcommand("ext-quiver", "ext-quiver of an algebra");
    c_ext->add_option("algebra", in1)->required();
    auto* c_hasse = app.add_subcommand("hasse", "Hasse diagram of a poset");
    c_hasse->add_option("poset", in1)->required();
    auto* c_r2m = app.add_subcommand("rep2mod", "representation to module");
    c_r2m->add_option("rep", in1)->required();
    auto* c_m2r = app.add_subcommand("mod2rep", "module to representation");
    c_m2r->add_option("module", in1)->required();
    auto* c_dist = app.add_subcommand("check-distributive", "submodule lattice distributivity");
    c_dist->add_option("module", in1)->required();
    auto* c_sec = app.add_subcommand("sections", "sheaf sections over an open set");
    c_sec->add_option("rep", in1)->required();
    c_sec->add_option("--open", open_text)->required();
    auto* c_rp = app.add_subcommand("random-poset", "seeded random poset");
    c_rp->add_option("--size", size);
    c_rp->add_option("--seed", seed);
    auto* c_corp = app.add_subcommand("corpus", "run a property suite");
    c_corp->add_option("--suite", suite)->check(CLI::IsMember({"roundtrip", "counterexamples"}));
    c_corp->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    if (c_rec->parsed() || c_cond->parsed()) {
        Algebra a = algebra_from_json(load(in1));
        if (auto bad = verify_algebra(a))
            throw ParseError("input is not an associative unital algebra (" + bad->kind + ")");
        RecognitionReport r = c_rec->parsed() ? recognize(a) : conditions_report(a);
        emit(report_to_json(r), out_path);
        return r.all_success() ? kOk : kNegative;
    }
    if (c_mk->parsed()) {
        Poset p = poset_from_json(load(in1));
        emit(algebra_to_json(incidence_algebra(p, parse_field(field_text))), out_path);
        return kOk;
    }
    if (c_tw->parsed()) {
        auto p = std::make_shared<const Poset>(poset_from_json(load(in1)));
        FieldSpec f = parse_field(field_text);
        TwoCocycle c = cocycle_from_json(load(in2), p, f);
        if (auto bad = cocycle_violation(c))
            throw InvalidCocycle("cocycle law fails on the chain starting at " +
                                 p->label((*bad)[0]));
        emit(algebra_to_json(twisted_incidence(*p, f, c)), out_path);
        return kOk;
    }
    if (c_ext->parsed()) {
        Algebra a = algebra_from_json(load(in1));
        FrameResult fr = idempotent_frame(a);
        if (std::holds_alternative<NotSplitBasic>(fr)) {
            emit(json{{"error", "not split basic"},
                      {"reason", std::get<NotSplitBasic>(fr).reason}},
                 out_path);
            return kNegative;
        }
        emit(quiver_to_json(ext_quiver(a, std::get<IdempotentFrame>(fr)), true), out_path);
        return kOk;
    }
    if (c_hasse->parsed()) {
        emit(quiver_to_json(poset_from_json(load(in1)).hasse(), false), out_path);
        return kOk;
    }
    if (c_r2m->parsed()) {
        Representation m = rep_from_json(load(in1));
        if (auto bad = verify_rep(m))
            throw ParseError("not a representation: paths disagree between " +
                             m.poset->label(bad->x) + " and " + m.poset->label(bad->y));
        auto kp = std::make_shared<const Algebra>(incidence_algebra(*m.poset, m.field));
        emit(module_to_json(rep_to_module(m, kp)), out_path);
        return kOk;
    }
    if (c_m2r->parsed()) {
        RightModule m = module_from_json(load(in1));
        if (verify_module(m)) throw ParseError("input does not satisfy the module axioms");
        auto p = std::make_shared<const Poset>(poset_from_incidence_labels(*m.algebra));
        emit(rep_to_json(module_to_rep(m, p)), out_path);
        return kOk;
    }
    if (c_dist->parsed()) {
        RightModule m = module_from_json(load(in1));
        if (m.algebra->field().is_rational())
            throw UnsupportedCharacteristic("check-distributive requires a prime field");
        bool dist = is_distributive_module(m);
        emit(json{{"distributive", dist}}, out_path);
        return dist ? kOk : kNegative;
    }
    if (c_sec->parsed()) {
        Representation m = rep_from_json(load(in1));
        std::vector<size_t> open;
        std::stringstream ss(open_text);
        std::string item;
        while (std::getline(ss, item, ',')) open.push_back(m.poset->index(item));
        SectionSpace s = sheaf_sections(m, open);
        json basis = json::array();
        for (size_t i = 0; i < s.dim; ++i) {
            json row = json::array();
            for (size_t j = 0; j < s.basis.cols(); ++j) row.push_back(s.basis.at(i, j).str());
            basis.push_back(row);
        }
        emit(json{{"dim", s.dim}, {"basis", basis}}, out_path);
        return kOk;
    }
    if (c_rp->parsed()) {
        Rng rng(seed);
        emit(poset_to_json(random_poset(rng, size)), out_path);
        return kOk;
    }
    if (c_corp->parsed())
        return suite == "roundtrip" ? corpus_roundtrip(seed) : corpus_counterexamples();
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UnsupportedCharacteristic& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const EnumerationTooLarge& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
}

#include "incalg/json_io.hpp"

namespace incalg {

namespace {

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("char") || !j["char"].is_number_unsigned())
        throw ParseError("field must be {\"char\": 0|p}");
    FieldSpec f{j["char"].get<unsigned long>()};
    f.validate();
    return f;
}

json field_to_json(const FieldSpec& f) { return json{{"char", f.characteristic}}; }

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

Vec vec_from_json(const json& j, FieldSpec f, size_t expect) {
    if (!j.is_array() || j.size() != expect) throw ParseError("vector has wrong length");
    Vec v;
    for (const auto& e : j) v.push_back(Scalar::parse(f, e.get<std::string>()));
    return v;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const json& j, FieldSpec f, size_t rows, size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix has wrong row count");
    Matrix m(rows, cols, f);
    for (size_t i = 0; i < rows; ++i) m.set_row(i, vec_from_json(j[i], f, cols));
    return m;
}

}  // namespace

json poset_to_json(const Poset& p) {
    json elements = json::array();
    for (const auto& l : p.elements()) elements.push_back(l);
    json gens = json::array();
    for (const auto& [x, y] : p.covers()) gens.push_back({p.label(x), p.label(y)});
    return json{{"elements", elements}, {"leq_generators", gens}};
}

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements")) throw ParseError("poset needs \"elements\"");
    std::vector<std::string> labels;
    for (const auto& e : j["elements"]) labels.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> gens;
    for (const auto& g : j.value("leq_generators", json::array())) {
        if (!g.is_array() || g.size() != 2) throw ParseError("leq_generators entries are pairs");
        gens.push_back({g[0].get<std::string>(), g[1].get<std::string>()});
    }
    return Poset::from_generators(labels, gens);
}

json algebra_to_json(const Algebra& a) {
    json structure = json::array();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (size_t k = 0; k < a.dim(); ++k)
                if (!a.structure(i, j, k).is_zero())
                    structure.push_back({i, j, k, a.structure(i, j, k).str()});
    return json{{"field", field_to_json(a.field())},
                {"dim", a.dim()},
                {"basis", a.basis_labels()},
                {"unit", vec_to_json(a.unit())},
                {"structure", structure}};
}

Algebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("algebra must be an object");
    FieldSpec f = field_from_json(j.at("field"));
    size_t n = j.at("dim").get<size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis"))
        for (const auto& e : j["basis"]) labels.push_back(e.get<std::string>());
    else
        for (size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    if (labels.size() != n) throw ParseError("basis label count must equal dim");
    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> constants;
    for (const auto& e : j.value("structure", json::array())) {
        if (!e.is_array() || e.size() != 4) throw ParseError("structure entries are [i,j,k,c]");
        size_t i = e[0].get<size_t>(), jj = e[1].get<size_t>(), k = e[2].get<size_t>();
        if (i >= n || jj >= n || k >= n) throw ParseError("structure index out of range");
        constants.push_back({i, jj, k, Scalar::parse(f, e[3].get<std::string>())});
    }
    return Algebra(f, labels, constants, vec_from_json(j.at("unit"), f, n));
}

json cocycle_to_json(const TwoCocycle& c) {
    const Poset& p = *c.poset();
    json values = json::array();
    for (const auto& [chain, v] : c.values())
        values.push_back({p.label(chain[0]), p.label(chain[1]), p.label(chain[2]), v.str()});
    return json{{"values", values}};
}

TwoCocycle cocycle_from_json(const json& j, PosetPtr p, FieldSpec f) {
    TwoCocycle c(p, f);
    for (const auto& e : j.value("values", json::array())) {
        if (!e.is_array() || e.size() != 4) throw ParseError("cocycle entries are [x,y,z,c]");
        c.set(p->index(e[0].get<std::string>()), p->index(e[1].get<std::string>()),
              p->index(e[2].get<std::string>()), Scalar::parse(f, e[3].get<std::string>()));
    }
    return c;
}

json rep_to_json(const Representation& m) {
    const Poset& p = *m.poset;
    json dims = json::object();
    for (size_t x = 0; x < p.size(); ++x) dims[p.label(x)] = m.dims[x];
    json maps = json::array();
    for (const auto& [x, y] : p.covers())
        maps.push_back({p.label(x), p.label(y), matrix_to_json(m.cover_map(x, y))});
    return json{{"poset", poset_to_json(p)},
                {"field", field_to_json(m.field)},
                {"dims", dims},
                {"maps", maps}};
}

Representation rep_from_json(const json& j) {
    auto p = std::make_shared<const Poset>(poset_from_json(j.at("poset")));
    FieldSpec f = j.contains("field") ? field_from_json(j["field"]) : FieldSpec{0};
    Representation m{p, f, std::vector<size_t>(p->size(), 0), {}};
    for (const auto& [label, d] : j.at("dims").items()) m.dims[p->index(label)] = d.get<size_t>();
    for (const auto& e : j.value("maps", json::array())) {
        if (!e.is_array() || e.size() != 3) throw ParseError("map entries are [x,y,matrix]");
        size_t x = p->index(e[0].get<std::string>()), y = p->index(e[1].get<std::string>());
        m.cover_maps[{x, y}] = matrix_from_json(e[2], f, m.dims[x], m.dims[y]);
    }
    for (const auto& [x, y] : p->covers())
        if (!m.cover_maps.count({x, y})) {
            if (m.dims[x] != 0 && m.dims[y] != 0) throw ParseError("missing cover map");
            m.cover_maps[{x, y}] = Matrix(m.dims[x], m.dims[y], f);
        }
    return m;
}

json module_to_json(const RightModule& m) {
    json action = json::array();
    for (const auto& rho : m.action) action.push_back(matrix_to_json(rho));
    return json{{"algebra", algebra_to_json(*m.algebra)}, {"dim", m.dim}, {"action", action}};
}

RightModule module_from_json(const json& j) {
    auto a = std::make_shared<const Algebra>(algebra_from_json(j.at("algebra")));
    size_t d = j.at("dim").get<size_t>();
    RightModule m{a, d, {}};
    const json& action = j.at("action");
    if (!action.is_array() || action.size() != a->dim())
        throw ParseError("action needs one matrix per basis element");
    for (const auto& e : action) m.action.push_back(matrix_from_json(e, a->field(), d, d));
    return m;
}

json quiver_to_json(const Quiver& q, bool with_multiplicities) {
    json arrows = json::array();
    for (const auto& arr : q.arrows) {
        if (with_multiplicities)
            arrows.push_back({q.vertices[arr.source], q.vertices[arr.target], arr.multiplicity});
        else
            arrows.push_back({q.vertices[arr.source], q.vertices[arr.target]});
    }
    return json{{"vertices", q.vertices}, {"arrows", arrows}};
}

namespace {

json obstruction_to_json(const Obstruction& o) {
    json comb = json::array();
    for (const auto& [chain, exp] : o.combination)
        comb.push_back({chain[0], chain[1], chain[2], exp.get_str()});
    return json{{"combination", comb},
                {"value", o.value.str()},
                {"required_power", o.required_power.get_str()}};
}

json certificate_to_json(const FailureCertificate& c) {
    json out{{"kind", certificate_kind(c)}};
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NotSplitBasic>) {
                out["reason"] = v.reason;
                out["witness"] = vec_to_json(v.witness);
                out["polynomial"] = vec_to_json(v.polynomial);
            } else if constexpr (std::is_same_v<T, CycleInExtQuiver>) {
                out["cycle"] = v.cycle;
            } else if constexpr (std::is_same_v<T, CentreTooLarge>) {
                out["dim"] = v.dim;
            } else if constexpr (std::is_same_v<T, PeirceMultiplicity>) {
                out["x"] = v.x;
                out["y"] = v.y;
                out["dim"] = v.dim;
            } else if constexpr (std::is_same_v<T, TransitivityFailure> ||
                                 std::is_same_v<T, ZeroComposite>) {
                out["x"] = v.x;
                out["y"] = v.y;
                out["z"] = v.z;
            } else {
                out["obstruction"] = obstruction_to_json(v.obstruction);
            }
        },
        c);
    return out;
}

json tristate(const std::optional<bool>& b) {
    if (!b) return nullptr;
    return *b;
}

}  // namespace

json report_to_json(const RecognitionReport& r) {
    json blocks = json::array();
    for (const auto& b : r.blocks) {
        json jb{{"cond1", tristate(b.cond1)},
                {"cond2", tristate(b.cond2)},
                {"cond3", tristate(b.cond3)},
                {"frame_vertices", b.frame_vertices},
                {"poset", b.poset ? poset_to_json(*b.poset) : json(nullptr)},
                {"iso", b.iso_rows ? matrix_to_json(*b.iso_rows) : json(nullptr)},
                {"certificate",
                 b.certificate ? certificate_to_json(*b.certificate) : json(nullptr)}};
        blocks.push_back(std::move(jb));
    }
    return json{{"connected", r.connected}, {"blocks", blocks}};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

}  // namespace incalg

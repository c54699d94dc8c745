#pragma once

#include <json.hpp>

#include "incalg/recognize.hpp"
#include "incalg/rep.hpp"

namespace incalg {

using nlohmann::json;

// Scalars travel as decimal strings ("a", "-a", "a/b", or residues mod p).

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

json cocycle_to_json(const TwoCocycle& c);
TwoCocycle cocycle_from_json(const json& j, PosetPtr p, FieldSpec f);

json rep_to_json(const Representation& m);
Representation rep_from_json(const json& j);

json module_to_json(const RightModule& m);
RightModule module_from_json(const json& j);

json quiver_to_json(const Quiver& q, bool with_multiplicities);

json report_to_json(const RecognitionReport& r);

/// Parses text, mapping syntax errors to ParseError with the byte position.
json parse_json(const std::string& text);

}  // namespace incalg

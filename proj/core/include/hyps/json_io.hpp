#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hyps/hypersym.hpp"
#include "hyps/muord.hpp"
#include "hyps/pel.hpp"
#include "hyps/polygon.hpp"
#include "hyps/strata.hpp"
#include "hyps/weil.hpp"

namespace hyps {

// Insertion-ordered objects keep emitted bytes stable and readable.
using Json = nlohmann::ordered_json;

/// Parses text as JSON; throws Error{Schema} with the parser's message.
Json parse_json(std::string_view text);

/// [["0",1],["1/2",3]]: canonical, slopes as "a" or "a/b".
Json polygon_to_json(const NewtonPolygon& p);
NewtonPolygon polygon_from_json(const Json& j);

/// {"cm":true,"places":[{"name":"v1","kind":"split","above":[{"name":"u1",
/// "polygon":[...]},...]},...]}. Unknown keys are rejected; every failure is
/// an Error whose message names the offending place.
Json datum_to_json(const PELSlopeDatum& d);
PELSlopeDatum datum_from_json(const Json& j);

/// {"d":4,"orbits":[{"name":"o1","f":[3,0]},...]}
SignatureDatum signature_from_json(const Json& j);
Json mu_ordinary_to_json(const std::vector<std::pair<std::string, NewtonPolygon>>& result);

/// {"h":1,"pairs":[{"w":"w1","wbar":"w1b","slope":"1/3"}]}. An optional
/// "wbar_slope" states the conjugate slope explicitly instead of deriving it.
CMPlaceSlopes weil_input_from_json(const Json& j);
Json weil_to_json(const CMPlaceSlopes& s, const WeilExponents& e);

/// {"level":"simple"|"hypersymmetric"|"none","components":[datum,...]}
Json verdict_to_json(const HypVerdict& v);
Json theorem_report_to_json(const TheoremReport& r);
Json poset_to_json(const StrataPoset& poset);

}  // namespace hyps

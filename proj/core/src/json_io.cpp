#include "hyps/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

#include "hyps/error.hpp"

namespace hyps {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(Errc::Schema, where.empty() ? what : where + ": " + what);
}

void require_object(const Json& j, const std::string& where,
                    std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) schema_error(where, "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) schema_error(where, "unknown key \"" + key + "\"");
  }
  for (auto key : required) {
    if (!j.contains(std::string(key))) schema_error(where, "missing key \"" + std::string(key) + "\"");
  }
}

std::string get_string(const Json& j, const std::string& key, const std::string& where) {
  const auto& v = j.at(key);
  if (!v.is_string()) schema_error(where, "\"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::int64_t get_int(const Json& v, const std::string& what, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, what + " must be an integer");
  return v.get<std::int64_t>();
}

int get_small_int(const Json& v, const std::string& what, const std::string& where) {
  const auto value = get_int(v, what, where);
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    schema_error(where, what + " is out of range");
  }
  return static_cast<int>(value);
}

std::string get_name(const Json& j, const std::string& key, const std::string& where) {
  auto name = get_string(j, key, where);
  if (!is_identifier(name)) schema_error(where, "\"" + name + "\" is not an identifier");
  return name;
}

// Re-raises library errors with the place that caused them.
template <typename F>
auto at_place(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Schema, std::string("malformed JSON: ") + e.what());
  }
}

Json polygon_to_json(const NewtonPolygon& p) {
  Json out = Json::array();
  for (const auto& part : p.parts()) out.push_back(Json::array({to_string(part.slope.value()), part.mult}));
  return out;
}

NewtonPolygon polygon_from_json(const Json& j) {
  if (!j.is_array()) schema_error("", "polygon must be an array of [slope, multiplicity] pairs");
  RawParts parts;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      schema_error("", "polygon entries must be [slope, multiplicity] pairs");
    }
    if (!entry[0].is_string()) schema_error("", "slope must be a string \"a\" or \"a/b\"");
    const auto slope = parse_rational(entry[0].get<std::string>());
    parts.emplace_back(slope, get_small_int(entry[1], "multiplicity", ""));
  }
  return normalize(parts);
}

Json datum_to_json(const PELSlopeDatum& d) {
  Json places = Json::array();
  for (const auto& place : d.tower().base_places()) {
    Json above = Json::array();
    for (const auto& upper : place.above) {
      above.push_back(Json{{"name", upper}, {"polygon", polygon_to_json(d.polygon(upper))}});
    }
    places.push_back(Json{{"name", place.name}, {"kind", std::string(to_string(place.kind))},
                          {"above", std::move(above)}});
  }
  return Json{{"cm", d.tower().cm()}, {"places", std::move(places)}};
}

PELSlopeDatum datum_from_json(const Json& j) {
  require_object(j, "datum", {"cm", "places"});
  if (!j.at("cm").is_boolean()) schema_error("datum", "\"cm\" must be a boolean");
  if (!j.at("places").is_array()) schema_error("datum", "\"places\" must be an array");
  const bool cm = j.at("cm").get<bool>();

  std::vector<BasePlace> places;
  std::vector<NewtonPolygon> polygons;
  for (const auto& pj : j.at("places")) {
    std::string where = "place";
    if (pj.is_object() && pj.contains("name") && pj.at("name").is_string()) {
      where = "place \"" + pj.at("name").get<std::string>() + "\"";
    }
    require_object(pj, where, {"name", "kind", "above"});
    BasePlace place;
    place.name = get_name(pj, "name", where);
    const auto kind = get_string(pj, "kind", where);
    if (kind == "split") {
      place.kind = PlaceKind::Split;
    } else if (kind == "inert") {
      place.kind = PlaceKind::Inert;
    } else {
      schema_error(where, "kind must be \"split\" or \"inert\", got \"" + kind + "\"");
    }
    if (!pj.at("above").is_array()) schema_error(where, "\"above\" must be an array");
    for (const auto& uj : pj.at("above")) {
      std::string upper_where = where;
      if (uj.is_object() && uj.contains("name") && uj.at("name").is_string()) {
        upper_where = "place \"" + uj.at("name").get<std::string>() + "\"";
      }
      require_object(uj, upper_where, {"name", "polygon"});
      place.above.push_back(get_name(uj, "name", upper_where));
      polygons.push_back(at_place(upper_where, [&] { return polygon_from_json(uj.at("polygon")); }));
    }
    places.push_back(std::move(place));
  }
  PlaceTower tower = at_place("tower", [&] { return PlaceTower(std::move(places), cm); });
  return at_place("datum", [&] { return PELSlopeDatum(std::move(tower), std::move(polygons)); });
}

SignatureDatum signature_from_json(const Json& j) {
  require_object(j, "signature", {"d", "orbits"});
  const int d = get_small_int(j.at("d"), "\"d\"", "signature");
  if (!j.at("orbits").is_array()) schema_error("signature", "\"orbits\" must be an array");
  std::vector<Orbit> orbits;
  for (const auto& oj : j.at("orbits")) {
    require_object(oj, "orbit", {"name", "f"});
    Orbit orbit;
    orbit.name = get_name(oj, "name", "orbit");
    const std::string where = "orbit \"" + orbit.name + "\"";
    if (!oj.at("f").is_array()) schema_error(where, "\"f\" must be an array of integers");
    for (const auto& fj : oj.at("f")) orbit.f_values.push_back(get_small_int(fj, "f value", where));
    orbits.push_back(std::move(orbit));
  }
  try {
    return SignatureDatum(d, std::move(orbits));
  } catch (const Error& e) {
    throw Error(Errc::Schema, std::string("signature: ") + e.what());
  }
}

Json mu_ordinary_to_json(const std::vector<std::pair<std::string, NewtonPolygon>>& result) {
  Json out = Json::array();
  for (const auto& [name, polygon] : result) {
    out.push_back(Json{{"orbit", name}, {"polygon", polygon_to_json(polygon)}});
  }
  return out;
}

CMPlaceSlopes weil_input_from_json(const Json& j) {
  require_object(j, "weil input", {"h", "pairs"});
  const auto h = get_int(j.at("h"), "\"h\"", "weil input");
  if (!j.at("pairs").is_array()) schema_error("weil input", "\"pairs\" must be an array");
  std::vector<ConjugatePair> pairs;
  for (const auto& pj : j.at("pairs")) {
    require_object(pj, "pair", {"w", "wbar", "slope"}, {"wbar_slope"});
    auto w = get_name(pj, "w", "pair");
    auto wbar = get_name(pj, "wbar", "pair");
    const std::string where = "pair \"" + w + "\"";
    auto slope = at_place(where, [&] { return Slope(parse_rational(get_string(pj, "slope", where))); });
    auto pair = CMPlaceSlopes::pair(std::move(w), std::move(wbar), slope);
    if (pj.contains("wbar_slope")) {
      pair.slope_wbar =
          at_place(where, [&] { return Slope(parse_rational(get_string(pj, "wbar_slope", where))); });
    }
    pairs.push_back(std::move(pair));
  }
  try {
    return CMPlaceSlopes(std::move(pairs), h);
  } catch (const Error& e) {
    throw Error(Errc::Schema, std::string("weil input: ") + e.what());
  }
}

Json weil_to_json(const CMPlaceSlopes& s, const WeilExponents& e) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < e.per_pair.size(); ++i) {
    const auto& p = e.per_pair[i];
    const auto& input = s.pairs()[i];
    const auto [ratio_w, ratio_wbar] = valuation_ratios(e, i);
    pairs.push_back(Json{{"w", input.w},
                         {"wbar", input.wbar},
                         {"m", p.m},
                         {"n", p.n},
                         {"min_place", p.w_is_min ? input.w : input.wbar},
                         {"inert_compatible", p.inert_compatible},
                         {"ratio_w", to_string(ratio_w)},
                         {"ratio_wbar", to_string(ratio_wbar)}});
  }
  return Json{{"a", e.a}, {"c", e.c}, {"h", e.h}, {"per_pair", std::move(pairs)}};
}

Json verdict_to_json(const HypVerdict& v) {
  Json components = Json::array();
  if (v.witness) {
    for (const auto& c : v.witness->components) components.push_back(datum_to_json(c));
  }
  return Json{{"level", std::string(to_string(v.level))}, {"components", std::move(components)}};
}

Json theorem_report_to_json(const TheoremReport& r) {
  return Json{{"hyp1_hypersymmetric", r.hyp1_hypersymmetric},
              {"hyp2_branch", std::string(to_string(r.hyp2_branch))},
              {"satisfied", r.satisfied}};
}

Json poset_to_json(const StrataPoset& poset) {
  Json nodes = Json::array();
  for (const auto& node : poset.nodes) nodes.push_back(polygon_to_json(node));
  Json edges = Json::array();
  for (const auto& [from, to] : poset.cover_edges) edges.push_back(Json::array({from, to}));
  return Json{{"nodes", std::move(nodes)},
              {"cover_edges", std::move(edges)},
              {"basic", poset.basic_index},
              {"ordinary", poset.ordinary_index}};
}

}  // namespace hyps

#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "hyps/error.hpp"
#include "hyps/json_io.hpp"
#include "oracles.hpp"

using namespace hyps;
using namespace hyps::test;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(Errc::Schema, "");
}

}  // namespace

TEST_CASE("polygon serialization is canonical") {
  const auto j = polygon_to_json(poly({{q(1, 2), 2}, {q(0), 1}, {q(2, 4), 1}}));
  CHECK(j.dump() == R"([["0",1],["1/2",3]])");
  CHECK(polygon_from_json(parse_json(R"([["2/4",1],["0",1]])")) == poly({{q(0), 1}, {q(1, 2), 1}}));
  CHECK(polygon_to_json(NewtonPolygon{}).dump() == "[]");
}

TEST_CASE("polygon round trip") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto p = oracle::random_polygon(rng, 5, 9, 6);
    CHECK(polygon_from_json(polygon_to_json(p)) == p);
  }
}

TEST_CASE("datum round trip") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_symmetric_datum(rng, 4, 4, 5);
    CHECK(datum_from_json(datum_to_json(d)) == d);
  }
  const auto flat = restrict(balanced_split_example());
  CHECK(datum_from_json(datum_to_json(flat)) == flat);
}

TEST_CASE("datum schema is strict") {
  auto e = error_of([] {
    datum_from_json(parse_json(
        R"({"cm":true,"places":[{"name":"v","kind":"inert","above":[{"name":"u","polygon":[["3/2",1]]}]}]})"));
  });
  CHECK(e.code() == Errc::SlopeOutOfRange);
  CHECK(std::string(e.what()).find("\"u\"") != std::string::npos);

  e = error_of([] { datum_from_json(parse_json(R"({"cm":true,"places":[],"extra":1})")); });
  CHECK(e.code() == Errc::Schema);
  CHECK(std::string(e.what()).find("extra") != std::string::npos);

  e = error_of([] {
    datum_from_json(parse_json(
        R"({"cm":true,"places":[{"name":"v","kind":"ramified","above":[{"name":"u","polygon":[]}]}]})"));
  });
  CHECK(e.code() == Errc::Schema);

  e = error_of([] {
    datum_from_json(parse_json(
        R"({"cm":true,"places":[{"name":"v","kind":"inert","above":[{"name":"u","polygon":[[0.5,1]]}]}]})"));
  });
  CHECK(e.code() == Errc::Schema);

  e = error_of([] {
    datum_from_json(parse_json(
        R"({"cm":true,"places":[{"name":"v","kind":"inert","above":[{"name":"u","polygon":[["1/2",-1]]}]}]})"));
  });
  CHECK(e.code() == Errc::NonPositiveMultiplicity);

  e = error_of([] {
    datum_from_json(parse_json(
        R"({"cm":true,"places":[{"name":"v","kind":"split","above":[{"name":"u","polygon":[["0",1]]},{"name":"u","polygon":[["1",1]]}]}]})"));
  });
  CHECK(e.code() == Errc::InvalidTower);

  e = error_of([] {
    datum_from_json(parse_json(
        R"({"cm":true,"places":[{"name":"","kind":"inert","above":[{"name":"u","polygon":[]}]}]})"));
  });
  CHECK(e.code() == Errc::Schema);

  e = error_of([] { parse_json("{\"cm\": true,"); });
  CHECK(e.code() == Errc::Schema);
}

TEST_CASE("signature and weil inputs") {
  const auto sig = signature_from_json(parse_json(R"({"d":4,"orbits":[{"name":"o1","f":[3,0]}]})"));
  CHECK(sig.d() == 4);
  CHECK(sig.orbits().front().f_values == std::vector<int>{3, 0});
  CHECK_THROWS_AS(signature_from_json(parse_json(R"({"d":4,"orbits":[{"name":"o1","f":[5]}]})")), Error);
  CHECK_THROWS_AS(signature_from_json(parse_json(R"({"d":4,"orbits":[],"x":0})")), Error);

  const auto slopes =
      weil_input_from_json(parse_json(R"({"h":1,"pairs":[{"w":"w1","wbar":"w1b","slope":"1/3"}]})"));
  const auto out = weil_to_json(slopes, weil_parameters(slopes));
  CHECK(out.dump() ==
        R"({"a":6,"c":6,"h":1,"per_pair":[{"w":"w1","wbar":"w1b","m":2,"n":4,"min_place":"w1","inert_compatible":false,"ratio_w":"1/3","ratio_wbar":"2/3"}]})");

  const auto unpaired = weil_input_from_json(
      parse_json(R"({"h":1,"pairs":[{"w":"w1","wbar":"w1b","slope":"1/3","wbar_slope":"1/3"}]})"));
  CHECK_THROWS_AS(weil_parameters(unpaired), Error);
}

TEST_CASE("verdict serialization") {
  const auto j = verdict_to_json(hypersymmetric_verdict(split_example()));
  CHECK(j.at("level") == "hypersymmetric");
  CHECK(j.at("components").size() == 2);
  CHECK(datum_from_json(j.at("components")[1]).polygon("v") == poly({{q(1, 2), 3}}));
  CHECK(verdict_to_json(hypersymmetric_verdict(two_inert_example())).dump() ==
        R"({"level":"none","components":[]})");
}

#include <doctest.h>

#include <random>

#include "hyps/error.hpp"
#include "hyps/polygon.hpp"
#include "oracles.hpp"

using namespace hyps;

namespace {

NewtonPolygon poly(RawParts parts) { return normalize(parts); }
Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(q(3, 6)) == "1/2");
  CHECK(to_string(q(2, 1)) == "2");
  CHECK(parse_rational("1/3") == q(1, 3));
  CHECK(parse_rational("-4/6") == q(-2, 3));
  CHECK(parse_rational("0") == q(0));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational("a/2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
  CHECK_THROWS_AS(parse_rational("+1"), Error);
}

TEST_CASE("normalize merges, sorts and reduces") {
  CHECK(poly({{q(1, 2), 2}, {q(0), 1}, {q(1, 2), 1}}) == poly({{q(0), 1}, {q(1, 2), 3}}));
  CHECK(poly({}).empty());
  auto reduced = poly({{q(3, 6), 2}});
  REQUIRE(reduced.slope_count() == 1);
  CHECK(reduced.parts()[0].slope.value().numerator() == 1);
  CHECK(reduced.parts()[0].slope.value().denominator() == 2);
  CHECK(reduced.parts()[0].mult == 2);
}

TEST_CASE("normalize rejects bad input") {
  try {
    poly({{q(3, 2), 1}});
    FAIL("expected SlopeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SlopeOutOfRange);
  }
  try {
    poly({{q(-1, 2), 1}});
    FAIL("expected SlopeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SlopeOutOfRange);
  }
  try {
    poly({{q(1, 2), 0}});
    FAIL("expected NonPositiveMultiplicity");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPositiveMultiplicity);
  }
}

TEST_CASE("amalgamate") {
  CHECK(amalgamate(poly({{q(0), 1}, {q(1), 1}}), poly({{q(1, 2), 2}})) ==
        poly({{q(0), 1}, {q(1, 2), 2}, {q(1), 1}}));
  const auto p = poly({{q(1, 3), 2}, {q(3, 4), 1}});
  CHECK(amalgamate(p, NewtonPolygon{}) == p);
  CHECK(amalgamate(poly({{q(1, 3), 1}}), poly({{q(1, 3), 2}})) == poly({{q(1, 3), 3}}));
}

TEST_CASE("dual") {
  CHECK(dual(poly({{q(0), 1}, {q(1, 2), 3}})) == poly({{q(1, 2), 3}, {q(1), 1}}));
  CHECK(dual(poly({{q(1, 2), 4}})) == poly({{q(1, 2), 4}}));
  CHECK(dual(NewtonPolygon{}).empty());
}

TEST_CASE("measures") {
  const auto m = measures(poly({{q(0), 1}, {q(1, 2), 3}}));
  CHECK(m.height == 4);
  CHECK(m.dim == q(3, 2));
  CHECK(m.breakpoints == std::vector<Point>{{q(0), q(0)}, {q(1), q(0)}, {q(4), q(3, 2)}});

  const auto empty = measures(NewtonPolygon{});
  CHECK(empty.height == 0);
  CHECK(empty.dim == q(0));

  const auto line = measures(poly({{q(1, 2), 4}}));
  CHECK(line.height == 4);
  CHECK(line.dim == q(2));
  CHECK(line.breakpoints == std::vector<Point>{{q(0), q(0)}, {q(4), q(2)}});
}

TEST_CASE("leq orientation: the straight line is smallest") {
  const auto line = poly({{q(1, 2), 4}});
  const auto ordinary = poly({{q(0), 2}, {q(1), 2}});
  CHECK(leq(line, ordinary));
  CHECK_FALSE(leq(ordinary, line));
  CHECK(leq(line, line));
  CHECK(leq(line, ordinary) == oracle::leq_by_sampling(line, ordinary));
  CHECK(leq(ordinary, line) == oracle::leq_by_sampling(ordinary, line));
}

TEST_CASE("leq rejects different endpoints") {
  try {
    leq(poly({{q(1, 2), 2}}), poly({{q(1, 2), 4}}));
    FAIL("expected IncomparableEndpoints");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncomparableEndpoints);
  }
  CHECK_THROWS_AS(leq(poly({{q(0), 2}}), poly({{q(1, 2), 2}})), Error);
}

TEST_CASE("leq agrees with sampled paths on random comparable pairs") {
  std::mt19937_64 rng(20261016);
  int compared = 0;
  for (int trial = 0; trial < 60000 && compared < 300; ++trial) {
    auto p = oracle::random_polygon(rng, 3, 4, 3);
    auto r = oracle::random_polygon(rng, 3, 4, 3);
    const auto mp = measures(p);
    const auto mr = measures(r);
    if (mp.height == 0 || mp.height != mr.height || mp.dim != mr.dim) continue;
    ++compared;
    CHECK(leq(p, r) == oracle::leq_by_sampling(p, r));
    CHECK(leq(r, p) == oracle::leq_by_sampling(r, p));
  }
  CHECK(compared > 50);
}

TEST_CASE("straight line is minimal among random polygons with equal endpoints") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = oracle::random_polygon(rng, 4, 5, 4);
    const auto m = measures(p);
    if (m.height == 0) continue;
    const Rational slope = m.dim / m.height;
    const auto line = normalize(RawParts{{slope, static_cast<int>(m.height)}});
    CHECK(leq(line, p));
  }
}

TEST_CASE("algebraic laws on random polygons") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = oracle::random_polygon(rng, 4, 6, 5);
    const auto b = oracle::random_polygon(rng, 4, 6, 5);
    const auto c = oracle::random_polygon(rng, 4, 6, 5);
    CHECK(dual(dual(a)) == a);
    CHECK(amalgamate(a, b) == amalgamate(b, a));
    CHECK(amalgamate(amalgamate(a, b), c) == amalgamate(a, amalgamate(b, c)));
    CHECK(normalize(std::vector<Part>(a.parts().begin(), a.parts().end())) == a);
    const auto mab = measures(amalgamate(a, b));
    CHECK(mab.height == measures(a).height + measures(b).height);
    CHECK(mab.dim == measures(a).dim + measures(b).dim);
  }
}

TEST_CASE("newton point average") {
  const std::vector<Rational> mu{q(1), q(0)};
  const std::vector<std::size_t> swap{1, 0};
  CHECK(newton_point_average(mu, swap, 2) == std::vector<Rational>{q(1, 2), q(1, 2)});

  const std::vector<Rational> point{q(3, 2), q(-1), q(0)};
  const std::vector<std::size_t> identity{0, 1, 2};
  for (int r = 1; r <= 4; ++r) CHECK(newton_point_average(point, identity, r) == point);

  const std::vector<Rational> e1{q(1), q(0), q(0)};
  const std::vector<std::size_t> cycle{1, 2, 0};
  const auto avg = newton_point_average(e1, cycle, 3);
  CHECK(avg == std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)});

  try {
    newton_point_average(e1, cycle, 2);
    FAIL("expected PeriodMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PeriodMismatch);
  }
  const std::vector<std::size_t> not_perm{0, 0, 1};
  CHECK_THROWS_AS(newton_point_average(e1, not_perm, 1), Error);
}

TEST_CASE("newton point average is sigma-invariant") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Rational> mu(n);
    for (auto& x : mu) x = Rational(static_cast<std::int64_t>(rng() % 7) - 3, 1 + rng() % 3);
    // The order of σ divides n!, so σ^120 fixes every point for n <= 5.
    const auto avg = newton_point_average(mu, sigma, 120);
    std::vector<Rational> moved(n);
    for (std::size_t k = 0; k < n; ++k) moved[k] = avg[sigma[k]];
    CHECK(moved == avg);
  }
}

TEST_CASE("exponent notation") {
  CHECK(to_exponent_string(poly({{q(0), 1}, {q(1, 2), 3}})) == "(0)^1 (1/2)^3");
  CHECK(to_exponent_string(NewtonPolygon{}) == "empty");
}

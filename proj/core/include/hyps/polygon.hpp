#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace hyps {

using Rational = boost::rational<std::int64_t>;

/// Renders `r` as "a" when integral, otherwise "a/b" in lowest terms.
std::string to_string(const Rational& r);

/// Parses "a" or "a/b" (optional leading '-', decimal digits only).
/// Throws Error{Schema} on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// A rational number in [0,1], always held in lowest terms.
class Slope {
public:
  /// Throws Error{SlopeOutOfRange} outside [0,1].
  explicit Slope(Rational value);
  Slope(std::int64_t num, std::int64_t den) : Slope(Rational(num, den)) {}

  const Rational& value() const noexcept { return value_; }
  Slope complement() const { return Slope(Rational(1) - value_); }

  friend bool operator==(const Slope& a, const Slope& b) noexcept {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) noexcept {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  Rational value_;
};

struct Part {
  Slope slope;
  int mult;

  friend bool operator==(const Part&, const Part&) = default;
};

using RawParts = std::vector<std::pair<Rational, int>>;

/// Canonical multiset of slopes with positive multiplicities. Parts are kept
/// with strictly increasing slopes; the empty polygon is a legal value.
class NewtonPolygon {
public:
  NewtonPolygon() = default;

  std::span<const Part> parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t slope_count() const noexcept { return parts_.size(); }

  bool has_slope(const Slope& s) const noexcept;
  std::vector<Slope> slopes() const;
  std::vector<int> multiplicities() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

private:
  friend NewtonPolygon normalize(const RawParts& parts);
  friend NewtonPolygon normalize(std::vector<Part> parts);

  std::vector<Part> parts_;
};

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

struct PolygonMeasures {
  std::int64_t height = 0;
  Rational dim = 0;
  /// Vertices of the convex path from (0,0) to (height, dim).
  std::vector<Point> breakpoints;
};

/// Merges equal slopes, sorts ascending and reduces. Throws
/// Error{SlopeOutOfRange} or Error{NonPositiveMultiplicity}.
NewtonPolygon normalize(const RawParts& parts);
NewtonPolygon normalize(std::vector<Part> parts);

/// Multiset union.
NewtonPolygon amalgamate(const NewtonPolygon& p, const NewtonPolygon& q);

/// The polarization involution, slope λ to 1-λ.
NewtonPolygon dual(const NewtonPolygon& p);

/// Every multiplicity multiplied by `factor` (factor >= 1).
NewtonPolygon scale_multiplicities(const NewtonPolygon& p, int factor);

PolygonMeasures measures(const NewtonPolygon& p);

/// Height of the convex path of `m` at abscissa x, 0 <= x <= height.
Rational path_value(const PolygonMeasures& m, const Rational& x);

/// p ⪯ q: the path of p lies on or above the path of q. The straight line is
/// the minimum, the most broken path the maximum. Throws
/// Error{IncomparableEndpoints} unless heights and dims agree.
bool leq(const NewtonPolygon& p, const NewtonPolygon& q);

/// Coordinate-wise mean of mu, σ(mu), ..., σ^{r-1}(mu), where
/// (σ·mu)[i] = mu[sigma[i]]. Throws Error{PeriodMismatch} unless σ^r fixes mu.
std::vector<Rational> newton_point_average(std::span<const Rational> mu,
                                           std::span<const std::size_t> sigma,
                                           int r);

/// Exponent notation, e.g. "(0)^1 (1/2)^3"; "empty" for the empty polygon.
std::string to_exponent_string(const NewtonPolygon& p);

}  // namespace hyps

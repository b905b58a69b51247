#include "hyps/polygon.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "hyps/error.hpp"

namespace hyps {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (text.empty()) throw Error(Errc::Schema, "malformed rational \"" + std::string(whole) + "\"");
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') throw Error(Errc::Schema, "malformed rational \"" + std::string(whole) + "\"");
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(Errc::Schema, "malformed rational \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw Error(Errc::Schema, "malformed rational \"" + std::string(text) + "\"");
  }
  std::int64_t den = parse_int(den_text, text);
  if (den == 0) throw Error(Errc::Schema, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

Slope::Slope(Rational value) : value_(value) {
  if (value_ < Rational(0) || value_ > Rational(1)) {
    throw Error(Errc::SlopeOutOfRange, "slope " + to_string(value_) + " outside [0,1]");
  }
}

bool NewtonPolygon::has_slope(const Slope& s) const noexcept {
  return std::binary_search(parts_.begin(), parts_.end(), Part{s, 1},
                            [](const Part& a, const Part& b) { return a.slope < b.slope; });
}

std::vector<Slope> NewtonPolygon::slopes() const {
  std::vector<Slope> out;
  out.reserve(parts_.size());
  for (const auto& part : parts_) out.push_back(part.slope);
  return out;
}

std::vector<int> NewtonPolygon::multiplicities() const {
  std::vector<int> out;
  out.reserve(parts_.size());
  for (const auto& part : parts_) out.push_back(part.mult);
  return out;
}

NewtonPolygon normalize(std::vector<Part> parts) {
  for (const auto& part : parts) {
    if (part.mult < 1) {
      throw Error(Errc::NonPositiveMultiplicity,
                  "multiplicity " + std::to_string(part.mult) + " of slope " +
                      to_string(part.slope.value()) + " is not positive");
    }
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.slope < b.slope; });
  NewtonPolygon out;
  for (const auto& part : parts) {
    if (!out.parts_.empty() && out.parts_.back().slope == part.slope) {
      out.parts_.back().mult += part.mult;
    } else {
      out.parts_.push_back(part);
    }
  }
  return out;
}

NewtonPolygon normalize(const RawParts& parts) {
  std::vector<Part> checked;
  checked.reserve(parts.size());
  for (const auto& [slope, mult] : parts) checked.push_back(Part{Slope(slope), mult});
  return normalize(std::move(checked));
}

NewtonPolygon amalgamate(const NewtonPolygon& p, const NewtonPolygon& q) {
  std::vector<Part> all(p.parts().begin(), p.parts().end());
  all.insert(all.end(), q.parts().begin(), q.parts().end());
  return normalize(std::move(all));
}

NewtonPolygon dual(const NewtonPolygon& p) {
  std::vector<Part> flipped;
  flipped.reserve(p.slope_count());
  for (const auto& part : p.parts()) flipped.push_back(Part{part.slope.complement(), part.mult});
  return normalize(std::move(flipped));
}

NewtonPolygon scale_multiplicities(const NewtonPolygon& p, int factor) {
  if (factor < 1) {
    throw Error(Errc::NonPositiveMultiplicity, "scale factor must be positive");
  }
  std::vector<Part> scaled(p.parts().begin(), p.parts().end());
  for (auto& part : scaled) part.mult *= factor;
  return normalize(std::move(scaled));
}

PolygonMeasures measures(const NewtonPolygon& p) {
  PolygonMeasures m;
  m.breakpoints.push_back(Point{0, 0});
  for (const auto& part : p.parts()) {
    m.height += part.mult;
    m.dim += part.slope.value() * part.mult;
    m.breakpoints.push_back(Point{Rational(m.height), m.dim});
  }
  return m;
}

Rational path_value(const PolygonMeasures& m, const Rational& x) {
  if (x < Rational(0) || x > Rational(m.height)) {
    throw Error(Errc::InvalidArgument, "abscissa " + to_string(x) + " outside the path");
  }
  const auto& pts = m.breakpoints;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (x <= pts[i].x) {
      const auto& a = pts[i - 1];
      const auto& b = pts[i];
      return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
  }
  return pts.back().y;
}

bool leq(const NewtonPolygon& p, const NewtonPolygon& q) {
  const auto mp = measures(p);
  const auto mq = measures(q);
  if (mp.height != mq.height || mp.dim != mq.dim) {
    throw Error(Errc::IncomparableEndpoints,
                "polygons end at (" + std::to_string(mp.height) + "," + to_string(mp.dim) +
                    ") and (" + std::to_string(mq.height) + "," + to_string(mq.dim) + ")");
  }
  // Both paths are linear between the union of their vertices.
  std::set<Rational> xs;
  for (const auto& pt : mp.breakpoints) xs.insert(pt.x);
  for (const auto& pt : mq.breakpoints) xs.insert(pt.x);
  return std::all_of(xs.begin(), xs.end(),
                     [&](const Rational& x) { return path_value(mp, x) >= path_value(mq, x); });
}

std::vector<Rational> newton_point_average(std::span<const Rational> mu,
                                           std::span<const std::size_t> sigma, int r) {
  const std::size_t n = mu.size();
  if (r < 1) throw Error(Errc::InvalidArgument, "period r must be positive");
  if (sigma.size() != n) {
    throw Error(Errc::InvalidArgument, "permutation length differs from the Newton point");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t image : sigma) {
    if (image >= n || seen[image]) {
      throw Error(Errc::InvalidArgument, "sigma is not a permutation of the coordinates");
    }
    seen[image] = true;
  }

  std::vector<Rational> current(mu.begin(), mu.end());
  std::vector<Rational> sum(n, Rational(0));
  for (int i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < n; ++k) sum[k] += current[k];
    std::vector<Rational> next(n);
    for (std::size_t k = 0; k < n; ++k) next[k] = current[sigma[k]];
    current = std::move(next);
  }
  if (!std::equal(current.begin(), current.end(), mu.begin(), mu.end())) {
    throw Error(Errc::PeriodMismatch,
                "sigma^" + std::to_string(r) + " does not fix the Newton point");
  }
  for (auto& value : sum) value /= r;
  return sum;
}

std::string to_exponent_string(const NewtonPolygon& p) {
  if (p.empty()) return "empty";
  std::string out;
  for (const auto& part : p.parts()) {
    if (!out.empty()) out += ' ';
    out += "(" + to_string(part.slope.value()) + ")^" + std::to_string(part.mult);
  }
  return out;
}

}  // namespace hyps

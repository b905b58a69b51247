#include "hyps/weil.hpp"

#include <numeric>
#include <set>

#include "hyps/error.hpp"
#include "hyps/pel.hpp"

namespace hyps {

CMPlaceSlopes::CMPlaceSlopes(std::vector<ConjugatePair> pairs, std::int64_t class_number_h)
    : pairs_(std::move(pairs)), h_(class_number_h) {
  if (h_ < 1) throw Error(Errc::InvalidArgument, "class number h must be positive");
  if (pairs_.empty()) throw Error(Errc::InvalidArgument, "no conjugate pairs given");
  std::set<std::string> names;
  for (const auto& p : pairs_) {
    for (const auto* name : {&p.w, &p.wbar}) {
      if (!is_identifier(*name)) {
        throw Error(Errc::InvalidArgument, "place name \"" + *name + "\" is not an identifier");
      }
      if (!names.insert(*name).second) {
        throw Error(Errc::InvalidArgument, "duplicate place name \"" + *name + "\"");
      }
    }
  }
}

ConjugatePair CMPlaceSlopes::pair(std::string w, std::string wbar, Slope slope) {
  return ConjugatePair{std::move(w), std::move(wbar), slope, slope.complement()};
}

WeilExponents weil_parameters(const CMPlaceSlopes& s) {
  std::int64_t c = 2;
  for (const auto& p : s.pairs()) {
    if (p.slope_w.value() + p.slope_wbar.value() != Rational(1)) {
      throw Error(Errc::SlopesDoNotPair, "slopes at " + p.w + " and " + p.wbar + " sum to " +
                                             to_string(p.slope_w.value() + p.slope_wbar.value()) +
                                             ", not 1");
    }
    c = std::lcm(c, p.slope_w.value().denominator());
  }

  WeilExponents out;
  out.c = c;
  out.h = s.class_number_h();
  out.a = out.h * c;
  for (const auto& p : s.pairs()) {
    PairExponents e;
    e.w_is_min = !(p.slope_wbar < p.slope_w);
    const Rational lambda_v = e.w_is_min ? p.slope_w.value() : p.slope_wbar.value();
    e.m = (lambda_v * c).numerator();
    e.n = c - e.m;
    e.inert_compatible = p.slope_w.value() == Rational(1, 2);
    out.per_pair.push_back(e);
  }
  return out;
}

WeilExponents rescale(const WeilExponents& e, std::int64_t factor) {
  if (factor < 1) throw Error(Errc::InvalidArgument, "rescale factor must be positive");
  WeilExponents out = e;
  out.c *= factor;
  out.a *= factor;
  for (auto& p : out.per_pair) {
    p.m *= factor;
    p.n *= factor;
  }
  return out;
}

std::pair<Rational, Rational> valuation_ratios(const WeilExponents& e, std::size_t i) {
  const auto& p = e.per_pair.at(i);
  // ord(p^a) = a = h·c at every place, and ord(a_w^{m}) = h·m.
  const Rational at_min(e.h * p.m, e.a);
  const Rational at_conj(e.h * p.n, e.a);
  return p.w_is_min ? std::pair{at_min, at_conj} : std::pair{at_conj, at_min};
}

}  // namespace hyps

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyps/polygon.hpp"

namespace hyps {

/// A complex-conjugate pair of places of a CM field over p with the slopes
/// prescribed at each member.
struct ConjugatePair {
  std::string w;
  std::string wbar;
  Slope slope_w;
  Slope slope_wbar;
};

/// Prescribed slopes at the places of a CM field, with its class number h.
class CMPlaceSlopes {
public:
  /// Throws Error{InvalidArgument} on h < 1, an empty list, or non-unique or
  /// malformed names. Pairing of slopes is checked by weil_parameters.
  CMPlaceSlopes(std::vector<ConjugatePair> pairs, std::int64_t class_number_h);

  /// Pair whose conjugate slope is derived as 1 - slope.
  static ConjugatePair pair(std::string w, std::string wbar, Slope slope);

  const std::vector<ConjugatePair>& pairs() const noexcept { return pairs_; }
  std::int64_t class_number_h() const noexcept { return h_; }

private:
  std::vector<ConjugatePair> pairs_;
  std::int64_t h_;
};

struct PairExponents {
  std::int64_t m = 0;  // exponent of a_w at the place with the smaller slope
  std::int64_t n = 0;  // exponent of the conjugate
  bool w_is_min = true;
  bool inert_compatible = false;  // slope 1/2 on both sides

  friend bool operator==(const PairExponents&, const PairExponents&) = default;
};

/// Exponent data of the Weil number π = ∏ a_w^{m_v} ā_w^{n_v} · u^{c/2},
/// a p^a-Weil number with ord_w(π)/ord_w(p^a) the prescribed slope.
struct WeilExponents {
  std::int64_t a = 0;
  std::int64_t c = 0;
  std::int64_t h = 0;
  std::vector<PairExponents> per_pair;

  friend bool operator==(const WeilExponents&, const WeilExponents&) = default;
};

/// c is the least even positive integer divisible by every slope
/// denominator, m_v = min(λ_w, λ_w̄)·c, n_v = c - m_v and a = h·c.
/// Throws Error{SlopesDoNotPair} when some λ_w + λ_w̄ != 1.
WeilExponents weil_parameters(const CMPlaceSlopes& s);

/// Same data for c multiplied by `factor` (a coarser admissible choice).
WeilExponents rescale(const WeilExponents& e, std::int64_t factor);

/// ord_w(π)/ord_w(p^a) and ord_w̄(π)/ord_w̄(p^a) for pair i, read back from
/// the exponents.
std::pair<Rational, Rational> valuation_ratios(const WeilExponents& e, std::size_t i);

}  // namespace hyps

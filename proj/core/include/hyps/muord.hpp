#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyps/pel.hpp"
#include "hyps/polygon.hpp"

namespace hyps {

/// One σ-orbit of complex embeddings with the multiplication type value
/// f(τ) of each member.
struct Orbit {
  std::string name;
  std::vector<int> f_values;
};

/// Multiplication-type data: d and the σ-orbits, in the same order as the
/// primes of F above p they correspond to.
class SignatureDatum {
public:
  /// Throws Error{InvalidArgument} unless d >= 1, orbit names are unique
  /// identifiers, orbits are nonempty and every f value lies in [0, d].
  SignatureDatum(int d, std::vector<Orbit> orbits);

  int d() const noexcept { return d_; }
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }

private:
  int d_;
  std::vector<Orbit> orbits_;
};

/// The j-th μ-ordinary slope of an orbit, j = 1..d:
/// #{τ in orbit : f(τ) > d - j} / #orbit.
Rational mu_ordinary_slope(const Orbit& orbit, int d, int j);

/// μ-ordinary Newton polygon of each orbit, each of height d.
std::vector<std::pair<std::string, NewtonPolygon>> mu_ordinary(const SignatureDatum& sig);

/// Attaches the μ-ordinary polygons to `tower`, orbit i going to upper place
/// i. Throws Error{InvalidArgument} when the counts differ.
PELSlopeDatum mu_ordinary_datum(const SignatureDatum& sig, const PlaceTower& tower);

}  // namespace hyps

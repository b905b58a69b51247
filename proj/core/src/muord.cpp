#include "hyps/muord.hpp"

#include <algorithm>
#include <set>

#include "hyps/error.hpp"

namespace hyps {

SignatureDatum::SignatureDatum(int d, std::vector<Orbit> orbits) : d_(d), orbits_(std::move(orbits)) {
  if (d_ < 1) throw Error(Errc::InvalidArgument, "d must be positive");
  if (orbits_.empty()) throw Error(Errc::InvalidArgument, "signature has no orbits");
  std::set<std::string> names;
  for (const auto& orbit : orbits_) {
    if (!is_identifier(orbit.name)) {
      throw Error(Errc::InvalidArgument, "orbit name \"" + orbit.name + "\" is not an identifier");
    }
    if (!names.insert(orbit.name).second) {
      throw Error(Errc::InvalidArgument, "duplicate orbit name \"" + orbit.name + "\"");
    }
    if (orbit.f_values.empty()) {
      throw Error(Errc::InvalidArgument, "orbit \"" + orbit.name + "\" is empty");
    }
    for (int f : orbit.f_values) {
      if (f < 0 || f > d_) {
        throw Error(Errc::InvalidArgument, "orbit \"" + orbit.name + "\" has f value " +
                                               std::to_string(f) + " outside [0, " +
                                               std::to_string(d_) + "]");
      }
    }
  }
}

Rational mu_ordinary_slope(const Orbit& orbit, int d, int j) {
  const auto size = static_cast<std::int64_t>(orbit.f_values.size());
  const auto count = std::count_if(orbit.f_values.begin(), orbit.f_values.end(),
                                   [&](int f) { return f > d - j; });
  return Rational(static_cast<std::int64_t>(count), size);
}

std::vector<std::pair<std::string, NewtonPolygon>> mu_ordinary(const SignatureDatum& sig) {
  std::vector<std::pair<std::string, NewtonPolygon>> out;
  out.reserve(sig.orbits().size());
  for (const auto& orbit : sig.orbits()) {
    RawParts parts;
    for (int j = 1; j <= sig.d(); ++j) parts.emplace_back(mu_ordinary_slope(orbit, sig.d(), j), 1);
    out.emplace_back(orbit.name, normalize(parts));
  }
  return out;
}

PELSlopeDatum mu_ordinary_datum(const SignatureDatum& sig, const PlaceTower& tower) {
  if (sig.orbits().size() != tower.upper_places().size()) {
    throw Error(Errc::InvalidArgument, "signature has " + std::to_string(sig.orbits().size()) +
                                           " orbits but the tower has " +
                                           std::to_string(tower.upper_places().size()) +
                                           " upper places");
  }
  std::vector<NewtonPolygon> polys;
  for (auto& [name, polygon] : mu_ordinary(sig)) polys.push_back(std::move(polygon));
  return PELSlopeDatum(tower, std::move(polys));
}

}  // namespace hyps

#include "hyps/pel.hpp"

#include <algorithm>
#include <set>

#include "hyps/error.hpp"

namespace hyps {

std::string_view to_string(PlaceKind kind) noexcept {
  return kind == PlaceKind::Split ? "split" : "inert";
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c); });
}

PlaceTower::PlaceTower(std::vector<BasePlace> places, bool cm)
    : places_(std::move(places)), cm_(cm) {
  if (places_.empty()) throw Error(Errc::InvalidTower, "tower has no places");
  std::set<std::string> base_names;
  std::set<std::string> upper_names;
  for (const auto& place : places_) {
    if (!is_identifier(place.name)) {
      throw Error(Errc::InvalidTower, "place name \"" + place.name + "\" is not an identifier");
    }
    if (!base_names.insert(place.name).second) {
      throw Error(Errc::InvalidTower, "duplicate place name \"" + place.name + "\"");
    }
    const std::size_t arity = place.kind == PlaceKind::Split ? 2 : 1;
    if (place.above.size() != arity) {
      throw Error(Errc::InvalidTower, "place \"" + place.name + "\" (" +
                                          std::string(to_string(place.kind)) + ") needs " +
                                          std::to_string(arity) + " upper place(s)");
    }
    for (const auto& upper : place.above) {
      if (!is_identifier(upper)) {
        throw Error(Errc::InvalidTower, "place name \"" + upper + "\" is not an identifier");
      }
      if (!upper_names.insert(upper).second) {
        throw Error(Errc::InvalidTower, "duplicate place name \"" + upper + "\"");
      }
      upper_.push_back(upper);
    }
    if (!cm_ && (place.kind != PlaceKind::Inert || place.above.front() != place.name)) {
      throw Error(Errc::InvalidTower,
                  "place \"" + place.name + "\" must be inert above itself when cm is false");
    }
  }
  // Base and upper names share one namespace; the degenerate tower reuses
  // each base name as its own upper name.
  for (const auto& place : places_) {
    if (upper_names.count(place.name) &&
        !(place.kind == PlaceKind::Inert && place.above.front() == place.name)) {
      throw Error(Errc::InvalidTower, "duplicate place name \"" + place.name + "\"");
    }
  }
}

PlaceTower PlaceTower::degenerate(const std::vector<std::string>& names) {
  std::vector<BasePlace> places;
  places.reserve(names.size());
  for (const auto& name : names) places.push_back(BasePlace{name, PlaceKind::Inert, {name}});
  return PlaceTower(std::move(places), false);
}

bool PlaceTower::all_inert() const noexcept {
  return std::all_of(places_.begin(), places_.end(),
                     [](const BasePlace& p) { return p.kind == PlaceKind::Inert; });
}

bool PlaceTower::all_split() const noexcept {
  return std::all_of(places_.begin(), places_.end(),
                     [](const BasePlace& p) { return p.kind == PlaceKind::Split; });
}

PELSlopeDatum::PELSlopeDatum(PlaceTower tower, std::vector<NewtonPolygon> polygons)
    : tower_(std::move(tower)), polygons_(std::move(polygons)) {
  if (polygons_.size() != tower_.upper_places().size()) {
    throw Error(Errc::InvalidDatum, "datum has " + std::to_string(polygons_.size()) +
                                        " polygons for " +
                                        std::to_string(tower_.upper_places().size()) +
                                        " upper places");
  }
  if (std::all_of(polygons_.begin(), polygons_.end(),
                  [](const NewtonPolygon& p) { return p.empty(); })) {
    throw Error(Errc::InvalidDatum, "datum has no slopes at any place");
  }
}

std::size_t PELSlopeDatum::place_index(std::string_view upper_name) const {
  const auto& names = tower_.upper_places();
  auto it = std::find(names.begin(), names.end(), upper_name);
  if (it == names.end()) {
    throw Error(Errc::InvalidArgument, "unknown place \"" + std::string(upper_name) + "\"");
  }
  return static_cast<std::size_t>(it - names.begin());
}

const NewtonPolygon& PELSlopeDatum::polygon(std::string_view upper_name) const {
  return polygons_[place_index(upper_name)];
}

namespace {

void require_cm(const PELSlopeDatum& d, const char* op) {
  if (!d.tower().cm()) {
    throw Error(Errc::NotCM, std::string(op) + " needs a datum over a CM tower (F != F0)");
  }
}

}  // namespace

PELSlopeDatum restrict(const PELSlopeDatum& d) {
  require_cm(d, "restrict");
  std::vector<std::string> names;
  std::vector<NewtonPolygon> polygons;
  for (const auto& place : d.tower().base_places()) {
    names.push_back(place.name);
    if (place.kind == PlaceKind::Split) {
      polygons.push_back(amalgamate(d.polygon(place.above[0]), d.polygon(place.above[1])));
    } else {
      polygons.push_back(scale_multiplicities(d.polygon(place.above[0]), 2));
    }
  }
  return PELSlopeDatum(PlaceTower::degenerate(names), std::move(polygons));
}

bool condition_star(const PELSlopeDatum& d) {
  require_cm(d, "condition_star");
  for (const auto& place : d.tower().base_places()) {
    if (place.kind != PlaceKind::Split) continue;
    const auto& u = d.polygon(place.above[0]);
    const auto& u_star = d.polygon(place.above[1]);
    for (const auto& part : u.parts()) {
      if (u_star.has_slope(part.slope)) return false;
    }
  }
  return true;
}

int multiplicity_from_dims(int dim_component, int local_degree, int b_rank_sqrt) {
  if (dim_component < 1 || local_degree < 1 || b_rank_sqrt < 1) {
    throw Error(Errc::InvalidArgument, "dimension, local degree and [B:F]^(1/2) must be >= 1");
  }
  const int denom = local_degree * b_rank_sqrt;
  if (dim_component % denom != 0) {
    throw Error(Errc::NonIntegralMultiplicity,
                std::to_string(dim_component) + "/" + std::to_string(denom) +
                    " is not an integral multiplicity");
  }
  return dim_component / denom;
}

}  // namespace hyps

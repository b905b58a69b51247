#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyps/polygon.hpp"

namespace hyps {

enum class PlaceKind { Inert, Split };

std::string_view to_string(PlaceKind kind) noexcept;

/// A prime of F0 over p together with the primes of F above it: one name
/// when inert, an ordered pair (u, u*) when split.
struct BasePlace {
  std::string name;
  PlaceKind kind = PlaceKind::Inert;
  std::vector<std::string> above;

  friend bool operator==(const BasePlace&, const BasePlace&) = default;
};

/// Nonempty ASCII identifier: a letter or '_' followed by letters, digits, '_'.
bool is_identifier(std::string_view name) noexcept;

/// Splitting data of F/F0 over p. When cm() is false the tower is the
/// degenerate F = F0 tower: every base place is inert above itself.
class PlaceTower {
public:
  /// Throws Error{InvalidTower} on duplicate or malformed names, wrong arity
  /// of `above`, or a non-degenerate place in a tower with cm = false.
  PlaceTower(std::vector<BasePlace> places, bool cm);

  /// The degenerate F0 tower on the given place names.
  static PlaceTower degenerate(const std::vector<std::string>& names);

  const std::vector<BasePlace>& base_places() const noexcept { return places_; }
  bool cm() const noexcept { return cm_; }

  /// Upper place names in tower order: base places in order, and within a
  /// split place u before u*.
  const std::vector<std::string>& upper_places() const noexcept { return upper_; }

  bool all_inert() const noexcept;
  bool all_split() const noexcept;

  friend bool operator==(const PlaceTower& a, const PlaceTower& b) {
    return a.cm_ == b.cm_ && a.places_ == b.places_;
  }

private:
  std::vector<BasePlace> places_;
  bool cm_;
  std::vector<std::string> upper_;
};

/// One Newton polygon per upper place of a tower: the decomposition of the
/// slope data of a B-linear polarized abelian variety along the primes of F.
class PELSlopeDatum {
public:
  /// `polygons` is aligned with tower.upper_places(). Throws
  /// Error{InvalidDatum} on a size mismatch or when every polygon is empty.
  PELSlopeDatum(PlaceTower tower, std::vector<NewtonPolygon> polygons);

  const PlaceTower& tower() const noexcept { return tower_; }
  const std::vector<NewtonPolygon>& polygons() const noexcept { return polygons_; }

  std::size_t place_index(std::string_view upper_name) const;
  /// Throws Error{InvalidArgument} for an unknown name.
  const NewtonPolygon& polygon(std::string_view upper_name) const;

  friend bool operator==(const PELSlopeDatum&, const PELSlopeDatum&) = default;

private:
  PlaceTower tower_;
  std::vector<NewtonPolygon> polygons_;
};

/// Restriction from F to F0. A split place receives the amalgamation of its
/// two upper polygons; an inert place receives its polygon with every
/// multiplicity doubled (local degree 2). Throws Error{NotCM}.
PELSlopeDatum restrict(const PELSlopeDatum& d);

/// True iff at every split base place the two upper polygons share no
/// slope. Inert places impose nothing. Throws Error{NotCM}.
bool condition_star(const PELSlopeDatum& d);

/// dim M_v(λ) / ([F_v:Q_p] [B:F]^{1/2}). Throws Error{NonIntegralMultiplicity}
/// when the quotient is not an integer, Error{InvalidArgument} on inputs < 1.
int multiplicity_from_dims(int dim_component, int local_degree, int b_rank_sqrt);

}  // namespace hyps

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyps/polygon.hpp"

namespace hyps {

inline constexpr int kDefaultSiegelBound = 12;

/// Finite poset of Newton polygons with common endpoints under ⪯.
struct StrataPoset {
  std::vector<NewtonPolygon> nodes;
  /// relation[i][j] is leq(nodes[i], nodes[j]).
  std::vector<std::vector<bool>> relation;
  /// Covering pairs (smaller, larger), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
  std::size_t basic_index = 0;
  std::size_t ordinary_index = 0;
};

/// Sorts lexicographically by breakpoint list, then topologically under ⪯
/// (smaller first, ties broken by the lexicographic rank). Duplicates are
/// removed. All inputs must share endpoints.
std::vector<NewtonPolygon> canonical_order(std::vector<NewtonPolygon> nodes);

/// Self-dual polygons of height 2g and dimension g whose breakpoints are all
/// lattice points, in canonical order. Throws Error{BoundExceeded} when
/// g > bound.
std::vector<NewtonPolygon> enumerate_siegel(int g, int bound = kDefaultSiegelBound);

/// Throws Error{InvalidArgument} on an empty list, Error{MixedEndpoints} when
/// endpoints differ, Error{NoUniqueExtreme} without a unique minimum and
/// maximum.
StrataPoset build_poset(std::vector<NewtonPolygon> nodes);

/// Graphviz rendering: nodes in poset order, cover edges small -> large.
std::string to_dot(const StrataPoset& poset);

enum class Scaling { Literal, TimesR };
std::string_view to_string(Scaling s) noexcept;

/// The admissible polygon N(r) + (1/2)^{n-2r} for unitary signature (1, n-1)
/// with p inert, where N(0) is empty, N(r) = (1/2-1/2r) + (1/2+1/2r) for even
/// r > 0 and (1/2-1/2r)^2 + (1/2+1/2r)^2 for odd r. TimesR multiplies the
/// exponents of N(r) by r. Throws Error{RangeError} unless 0 <= 2r <= n.
NewtonPolygon bueltel_wedhorn(int n, int r, Scaling scaling);

}  // namespace hyps

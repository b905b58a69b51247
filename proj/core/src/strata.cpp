#include "hyps/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hyps/error.hpp"

namespace hyps {

namespace {

bool breakpoints_less(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Point& p, const Point& q) {
                                        if (p.x != q.x) return p.x < q.x;
                                        return p.y < q.y;
                                      });
}

void require_common_endpoints(const std::vector<NewtonPolygon>& nodes) {
  const auto first = measures(nodes.front());
  for (const auto& node : nodes) {
    const auto m = measures(node);
    if (m.height != first.height || m.dim != first.dim) {
      throw Error(Errc::MixedEndpoints, "polygon " + to_exponent_string(node) +
                                            " does not end at (" + std::to_string(first.height) +
                                            "," + to_string(first.dim) + ")");
    }
  }
}

// Slopes a/b < 1/2 in lowest terms with b <= max_den, ascending.
std::vector<Slope> lower_slopes(int max_den) {
  std::vector<Slope> out;
  for (int b = 1; b <= max_den; ++b) {
    for (int a = 0; 2 * a < b; ++a) {
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Chooses multiplicities (multiples of the denominator) for candidates[from..]
// so the lower half has height at most g.
void extend_lower(const std::vector<Slope>& candidates, std::size_t from, int remaining,
                  std::vector<Part>& chosen, int g, std::vector<NewtonPolygon>& out) {
  if (from == candidates.size()) {
    std::vector<Part> parts = chosen;
    for (const auto& part : chosen) parts.push_back(Part{part.slope.complement(), part.mult});
    const int lower_height = g - remaining;
    if (g - lower_height > 0) parts.push_back(Part{Slope(1, 2), 2 * (g - lower_height)});
    out.push_back(normalize(std::move(parts)));
    return;
  }
  extend_lower(candidates, from + 1, remaining, chosen, g, out);
  const auto den = static_cast<int>(candidates[from].value().denominator());
  for (int mult = den; mult <= remaining; mult += den) {
    chosen.push_back(Part{candidates[from], mult});
    extend_lower(candidates, from + 1, remaining - mult, chosen, g, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<NewtonPolygon> canonical_order(std::vector<NewtonPolygon> nodes) {
  if (nodes.empty()) return nodes;
  require_common_endpoints(nodes);

  std::vector<std::vector<Point>> keys;
  std::vector<std::size_t> index(nodes.size());
  std::iota(index.begin(), index.end(), 0);
  for (const auto& node : nodes) keys.push_back(measures(node).breakpoints);
  std::stable_sort(index.begin(), index.end(),
                   [&](std::size_t a, std::size_t b) { return breakpoints_less(keys[a], keys[b]); });

  std::vector<NewtonPolygon> sorted;
  for (std::size_t i : index) {
    if (sorted.empty() || !(sorted.back() == nodes[i])) sorted.push_back(nodes[i]);
  }

  // Kahn's algorithm, always releasing the lexicographically first source.
  const std::size_t n = sorted.size();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(sorted[i], sorted[j])) {
        above[i].push_back(j);
        ++indegree[j];
      }
    }
  }
  std::vector<NewtonPolygon> out;
  std::vector<bool> done(n, false);
  while (out.size() < n) {
    std::size_t next = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && indegree[i] == 0) {
        next = i;
        break;
      }
    }
    done[next] = true;
    out.push_back(sorted[next]);
    for (std::size_t j : above[next]) --indegree[j];
  }
  return out;
}

std::vector<NewtonPolygon> enumerate_siegel(int g, int bound) {
  if (g < 0) throw Error(Errc::InvalidArgument, "g must be nonnegative");
  if (g > bound) {
    throw Error(Errc::BoundExceeded,
                "g = " + std::to_string(g) + " exceeds the bound " + std::to_string(bound));
  }
  if (g == 0) return {NewtonPolygon{}};
  std::vector<NewtonPolygon> found;
  std::vector<Part> chosen;
  extend_lower(lower_slopes(g), 0, g, chosen, g, found);
  return canonical_order(std::move(found));
}

StrataPoset build_poset(std::vector<NewtonPolygon> nodes) {
  if (nodes.empty()) throw Error(Errc::InvalidArgument, "poset needs at least one node");
  StrataPoset poset;
  poset.nodes = canonical_order(std::move(nodes));
  const std::size_t n = poset.nodes.size();
  poset.relation.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) poset.relation[i][j] = leq(poset.nodes[i], poset.nodes[j]);
  }
  const auto& rel = poset.relation;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !rel[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (k != i && k != j && rel[i][k] && rel[k][j]) covered = false;
      }
      if (covered) poset.cover_edges.emplace_back(i, j);
    }
  }

  auto find_extreme = [&](bool minimum) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i) {
      bool extreme = true;
      for (std::size_t j = 0; j < n && extreme; ++j) extreme = minimum ? rel[i][j] : rel[j][i];
      if (extreme) return i;
    }
    throw Error(Errc::NoUniqueExtreme, std::string("poset has no unique ") +
                                           (minimum ? "minimum" : "maximum"));
  };
  poset.basic_index = find_extreme(true);
  poset.ordinary_index = find_extreme(false);
  return poset;
}

std::string to_dot(const StrataPoset& poset) {
  std::ostringstream out;
  out << "digraph strata {\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << to_exponent_string(poset.nodes[i]) << "\"];\n";
  }
  for (const auto& [from, to] : poset.cover_edges) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

std::string_view to_string(Scaling s) noexcept {
  return s == Scaling::Literal ? "literal" : "times_r";
}

NewtonPolygon bueltel_wedhorn(int n, int r, Scaling scaling) {
  if (n < 1 || r < 0 || 2 * r > n) {
    throw Error(Errc::RangeError, "need n >= 1 and 0 <= r <= n/2, got n = " + std::to_string(n) +
                                      ", r = " + std::to_string(r));
  }
  std::vector<Part> parts;
  if (r > 0) {
    int mult = (r % 2 == 0) ? 1 : 2;
    if (scaling == Scaling::TimesR) mult *= r;
    const Rational offset(1, 2 * r);
    parts.push_back(Part{Slope(Rational(1, 2) - offset), mult});
    parts.push_back(Part{Slope(Rational(1, 2) + offset), mult});
  }
  if (n - 2 * r > 0) parts.push_back(Part{Slope(1, 2), n - 2 * r});
  return normalize(std::move(parts));
}

}  // namespace hyps

#include "hyps/hypersym.hpp"

#include <algorithm>
#include <map>

#include "hyps/error.hpp"

namespace hyps {

std::string_view to_string(HypLevel level) noexcept {
  switch (level) {
    case HypLevel::SimpleHypersymmetric: return "simple";
    case HypLevel::Hypersymmetric: return "hypersymmetric";
    case HypLevel::None: return "none";
  }
  return "none";
}

std::string_view to_string(Transfer t) noexcept {
  return t == Transfer::Transfers ? "transfers" : "unknown";
}

std::string_view to_string(SplittingBranch b) noexcept {
  switch (b) {
    case SplittingBranch::Inert: return "inert";
    case SplittingBranch::SplitWithStar: return "split_with_star";
    case SplittingBranch::Fails: return "fails";
  }
  return "fails";
}

bool is_balanced(const PELSlopeDatum& d) {
  const auto& polys = d.polygons();
  const std::size_t n = polys.front().slope_count();
  if (n == 0) return false;
  const int m = polys.front().parts().front().mult;
  return std::all_of(polys.begin(), polys.end(), [&](const NewtonPolygon& p) {
    if (p.slope_count() != n) return false;
    return std::all_of(p.parts().begin(), p.parts().end(),
                       [&](const Part& part) { return part.mult == m; });
  });
}

namespace {

std::vector<int> sorted_multiplicities(const NewtonPolygon& p) {
  auto mults = p.multiplicities();
  std::sort(mults.begin(), mults.end());
  return mults;
}

}  // namespace

bool is_B_symmetric(const PELSlopeDatum& d) {
  const auto& polys = d.polygons();
  if (polys.front().empty()) return false;
  const auto reference = sorted_multiplicities(polys.front());
  return std::all_of(polys.begin(), polys.end(), [&](const NewtonPolygon& p) {
    return sorted_multiplicities(p) == reference;
  });
}

BalancedDecomposition decompose(const PELSlopeDatum& d) {
  if (!is_B_symmetric(d)) {
    throw Error(Errc::NotSymmetric, "datum is not B-symmetric");
  }
  const auto& polys = d.polygons();
  // Per place: multiplicity -> slopes carrying it, ascending.
  std::vector<std::map<int, std::vector<Slope>>> classes(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& part : polys[i].parts()) classes[i][part.mult].push_back(part.slope);
  }

  BalancedDecomposition out;
  for (const auto& [mult, slopes] : classes.front()) {
    for (std::size_t rank = 0; rank < slopes.size(); ++rank) {
      std::vector<NewtonPolygon> component;
      component.reserve(polys.size());
      for (std::size_t i = 0; i < polys.size(); ++i) {
        component.push_back(normalize(std::vector<Part>{Part{classes[i].at(mult)[rank], mult}}));
      }
      out.components.emplace_back(d.tower(), std::move(component));
    }
  }
  return out;
}

PELSlopeDatum amalgamate_components(const std::vector<PELSlopeDatum>& components) {
  if (components.empty()) throw Error(Errc::InvalidArgument, "no components to amalgamate");
  const auto& tower = components.front().tower();
  std::vector<NewtonPolygon> polys = components.front().polygons();
  for (std::size_t c = 1; c < components.size(); ++c) {
    if (!(components[c].tower() == tower)) {
      throw Error(Errc::InvalidArgument, "components live over different towers");
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
      polys[i] = amalgamate(polys[i], components[c].polygons()[i]);
    }
  }
  return PELSlopeDatum(tower, std::move(polys));
}

HypVerdict hypersymmetric_verdict(const PELSlopeDatum& d) {
  HypVerdict verdict;
  if (is_balanced(d)) {
    verdict.level = HypLevel::SimpleHypersymmetric;
  } else if (is_B_symmetric(d)) {
    verdict.level = HypLevel::Hypersymmetric;
  } else {
    return verdict;
  }
  verdict.witness = decompose(d);
  return verdict;
}

Transfer subfield_transfer(const PELSlopeDatum& d) {
  if (!d.tower().cm()) throw Error(Errc::NotCM, "subfield_transfer needs a CM tower");
  if (hypersymmetric_verdict(d).level == HypLevel::None) {
    throw Error(Errc::PreconditionNotHypersymmetric,
                "datum admits no B-hypersymmetric point; nothing to transfer");
  }
  if (d.tower().all_inert()) return Transfer::Transfers;
  if (d.tower().all_split() && condition_star(d)) return Transfer::Transfers;
  return Transfer::Unknown;
}

bool is_zeta_B(const PELSlopeDatum& d, int brauer_order) {
  if (brauer_order < 1) throw Error(Errc::InvalidArgument, "Brauer order must be positive");
  const auto target = normalize(std::vector<Part>{Part{Slope(1, 2), brauer_order}});
  return std::all_of(d.polygons().begin(), d.polygons().end(),
                     [&](const NewtonPolygon& p) { return p == target; });
}

TheoremReport theorem_checklist(const PELSlopeDatum& d) {
  if (!d.tower().cm()) throw Error(Errc::NotCM, "theorem_checklist needs a CM tower");
  TheoremReport report;
  report.hyp1_hypersymmetric = hypersymmetric_verdict(d).level != HypLevel::None;
  if (d.tower().all_inert()) {
    report.hyp2_branch = SplittingBranch::Inert;
  } else if (d.tower().all_split() && condition_star(d)) {
    report.hyp2_branch = SplittingBranch::SplitWithStar;
  } else {
    report.hyp2_branch = SplittingBranch::Fails;
  }
  report.satisfied = report.hyp1_hypersymmetric && report.hyp2_branch != SplittingBranch::Fails;
  return report;
}

}  // namespace hyps

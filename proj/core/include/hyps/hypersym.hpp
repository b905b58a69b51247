#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyps/pel.hpp"

namespace hyps {

/// Pairwise slope-disjoint balanced data over one tower whose per-place
/// amalgamation is the decomposed datum.
struct BalancedDecomposition {
  std::vector<PELSlopeDatum> components;
};

enum class HypLevel { SimpleHypersymmetric, Hypersymmetric, None };

/// "simple", "hypersymmetric" or "none".
std::string_view to_string(HypLevel level) noexcept;

struct HypVerdict {
  HypLevel level = HypLevel::None;
  std::optional<BalancedDecomposition> witness;
};

enum class Transfer { Transfers, Unknown };
std::string_view to_string(Transfer t) noexcept;

enum class SplittingBranch { Inert, SplitWithStar, Fails };
std::string_view to_string(SplittingBranch b) noexcept;

/// Hypotheses of the Hecke-orbit theorem: (1) the stratum has a
/// B-hypersymmetric point; (2) p inert in F/F0, or totally split with
/// condition (*).
struct TheoremReport {
  bool hyp1_hypersymmetric = false;
  SplittingBranch hyp2_branch = SplittingBranch::Fails;
  bool satisfied = false;
};

/// Same number n >= 1 of distinct slopes at every upper place and one common
/// multiplicity m everywhere.
bool is_balanced(const PELSlopeDatum& d);

/// Same slope count n >= 1 at every upper place and the same multiset of
/// multiplicities at every upper place.
bool is_B_symmetric(const PELSlopeDatum& d);

/// Splits a B-symmetric datum into singleton balanced components, one per
/// (multiplicity class, rank within class); slopes of equal multiplicity are
/// paired across places in ascending order. Throws Error{NotSymmetric}.
BalancedDecomposition decompose(const PELSlopeDatum& d);

/// Per-place amalgamation of all components. Throws Error{InvalidArgument}
/// when the list is empty or the towers differ.
PELSlopeDatum amalgamate_components(const std::vector<PELSlopeDatum>& components);

HypVerdict hypersymmetric_verdict(const PELSlopeDatum& d);

/// Whether F-hypersymmetry descends to F0: guaranteed when every base place
/// is inert, or every base place splits and condition (*) holds. Nothing is
/// claimed otherwise. Throws Error{NotCM} or
/// Error{PreconditionNotHypersymmetric}.
Transfer subfield_transfer(const PELSlopeDatum& d);

/// Every upper polygon equals (1/2)^brauer_order. The Brauer order is an
/// input; it is never computed here.
bool is_zeta_B(const PELSlopeDatum& d, int brauer_order);

/// Throws Error{NotCM}.
TheoremReport theorem_checklist(const PELSlopeDatum& d);

}  // namespace hyps

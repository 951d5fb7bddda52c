#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kkb/upper_set.hpp"

namespace kkb {

struct CoverSearchLimits {
  /// Cap on sum over minimals M of 2^|M| (the raw candidate count).
  std::size_t candidate_cap = std::size_t{1} << 20;
  /// Branch-and-bound nodes per search before giving up with SizeLimitExceeded.
  std::uint64_t node_limit = 20'000'000;
};

struct CoverSolution {
  Cover cover;
  double cost = 0.0;  // sum of p^|S| over cover
  double p = 0.0;
};

struct ExpectationThreshold {
  double q = 0.0;
  Cover witness_cover;  // cost <= 1/2 at q - tolerance
  double tolerance = 0.0;
  int iterations = 0;
};

/// Deduplicated nonempty subsets of the minimal elements, canonically ordered.
/// A cover element S can only help if S is inside some minimal, and the empty
/// mask costs 1 > 1/2, so this is the whole useful search space.
std::vector<SubsetMask> candidate_cover_elements(const UpperSet& f,
                                                 std::size_t cap = CoverSearchLimits{}.candidate_cap);

/// Exact minimum of sum p^|S| over covers of F. Among optimal covers the
/// lexicographically smallest (canonical element order) is returned.
/// Requires 0 < p < 1.
CoverSolution min_cover_cost(const UpperSet& f, double p, const CoverSearchLimits& limits = {});

/// True iff some cover has cost <= 1/2. Stops at the first such cover.
bool is_p_small(const UpperSet& f, double p, const CoverSearchLimits& limits = {});

/// Largest p at which F is p-small, by bisection (at most 64 halvings).
ExpectationThreshold expectation_threshold(const UpperSet& f, double tol = 1e-9,
                                           const CoverSearchLimits& limits = {});

}  // namespace kkb

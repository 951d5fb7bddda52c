#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "kkb/upper_set.hpp"

namespace kkb {

/// Lattice elementary symmetric polynomial over (2^X, union, intersection):
/// sigma_k(S_1..S_m) = union over |I| = k of the intersection of S_i, i in I.
struct SigmaResult {
  int k = 0;
  SubsetMask value;
};

/// Computed by membership counting: x is in sigma_k iff x lies in at least k
/// of the sets. Errors: EmptyInput, KOutOfRange (k outside [1, m]),
/// WidthMismatch.
SigmaResult sigma_k(std::span<const SubsetMask> sets, int k);

/// Largest m with sigma_m(F0) nonempty. At least 1 since sigma_1 is the union.
int max_nonempty_sigma_index(const UpperSet& f);

enum class DimConvention {
  unrestricted,   // cover elements are arbitrary nonempty subsets of X
  within_family,  // cover elements must themselves belong to F
};

std::string_view to_string(DimConvention c);

inline constexpr std::size_t kDimMinimalCap = 16;

struct DimensionResult {
  int dim = 0;
  Cover witness;
  DimConvention convention = DimConvention::unrestricted;
};

/// Minimum size of a nontrivial cover. A cover element S covers exactly the
/// minimals containing it, so this is the fewest blocks partitioning F0 such
/// that each block has an admissible common intersection (nonempty, and for
/// within_family also a member of F). Exact over subsets of F0 with
/// memoisation on the uncovered set. Errors: SizeLimitExceeded if |F0| > 16.
DimensionResult covering_dimension(const UpperSet& f, DimConvention convention = DimConvention::unrestricted);

/// |F0| + 1 - max_nonempty_sigma_index(F).
int dim_upper_bound_via_sigma(const UpperSet& f);

}  // namespace kkb

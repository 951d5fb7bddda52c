#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kkb/bounds.hpp"

namespace kkb {

struct FamilySpec {
  std::string name;
  int from = 0;
  int to = -1;  // inclusive; to < from is an empty range
  std::uint64_t seed = 0;
};

/// One row of a sweep. Quantities past computation caps stay empty; the
/// reason goes into `errors`.
struct SweepRecord {
  int n = 0;
  std::optional<std::size_t> min_count;
  std::optional<int> ell0;
  std::optional<int> ell;
  std::optional<int> dim_unrestricted;
  std::optional<int> dim_within_family;
  std::optional<double> q;
  std::optional<double> p_c;
  std::optional<double> bound_value;
  std::optional<double> width;
  std::optional<bool> nontrivial_info;
  std::optional<double> ratio_perfect;  // q * log(ell)
  /// sigma_empty_at[t]: whether sigma_{|F0| - t} is empty; empty optional
  /// when |F0| - t < 1.
  std::vector<std::optional<bool>> sigma_empty_at;
  std::vector<std::string> errors;
};

struct SweepOptions {
  double tol = 1e-9;
  CoverSearchLimits cover_limits;
};

/// One record per n in [spec.from, spec.to], each computed independently.
std::vector<SweepRecord> sweep(const FamilySpec& spec, const BoundVariant& v, int t_max,
                               const SweepOptions& options = {});

struct SigmaEmptinessOnset {
  int t = 0;
  /// Smallest observed n from which sigma_{|F0|-t} is empty in every later row.
  std::optional<int> from_n;
};

struct Contradiction {
  int n = 0;
  std::string condition;
};

struct NecessaryConditionsReport {
  std::vector<SigmaEmptinessOnset> sigma_onsets;
  bool min_count_strictly_increasing = false;
  /// Empty when fewer than two rows have a dimension.
  std::optional<bool> dim_strictly_increasing;
  /// Rows with nontrivial_info while a single-instance necessary condition
  /// fails. Any entry points at a bug.
  std::vector<Contradiction> contradictions;
};

/// Errors: EmptyInput.
NecessaryConditionsReport necessary_conditions_report(std::span<const SweepRecord> records, const BoundVariant& v);

struct Classification {
  enum class Kind { nontrivial_from_n, perfect_trend, never_nontrivial, inconclusive };
  Kind kind = Kind::inconclusive;
  std::optional<int> from_n;
  std::string note;
};

std::string_view to_string(Classification::Kind k);

/// Finite-sample diagnostic over rows sorted by n:
///  - nontrivial_from_n: bound < 1 on every row from some observed n on;
///  - perfect_trend: additionally q * log(ell) strictly decreases over the
///    trailing `window_fraction` of the rows (rounded up);
///  - never_nontrivial: no row has bound < 1;
///  - inconclusive: anything else, including rows lacking a bound.
/// Errors: TooFewRecords (fewer than 3 rows).
Classification information_classification(std::span<const SweepRecord> records, double window_fraction = 0.5);

/// Header plus one line per record; numbers at 12 significant digits.
std::string sweep_csv(std::span<const SweepRecord> records, int t_max);

}  // namespace kkb

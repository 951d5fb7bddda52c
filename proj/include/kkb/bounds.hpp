#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kkb/expectation_threshold.hpp"
#include "kkb/measure.hpp"
#include "kkb/structure.hpp"
#include "kkb/upper_set.hpp"

namespace kkb {

enum class LogBase { two, e };
enum class BoundArgument { ell, two_ell0 };

std::string_view to_string(LogBase b);
std::string_view to_string(BoundArgument a);

/// One form of the upper bound p_c <= K * q * log(argument).
struct BoundVariant {
  std::string name = "custom";
  double K = 8.0;
  LogBase log_base = LogBase::two;
  BoundArgument argument = BoundArgument::two_ell0;

  /// K * q * log(ell); K is configurable.
  static BoundVariant kk_log_ell(double K = 8.0);
  /// K = 8 with log(2 * ell0).
  static BoundVariant bell();
  /// K = 4.5 with log(2 * ell0); the best constant known without extra hypotheses.
  static BoundVariant park_vondrak();
  static BoundVariant custom(double K, LogBase base, BoundArgument argument);

  static std::vector<BoundVariant> presets();
};

/// Smallest K for which the bound is known to hold with no condition on the
/// sequence. Smaller constants (e.g. ~3.998) need ell -> infinity and get
/// flagged in reports.
inline constexpr double kUnconditionalK = 4.5;

double log_in_base(double x, LogBase base);
double bound_argument(Ell e, BoundArgument a);

/// K * q * log(argument), from an already computed q.
double bound_value(double q, Ell e, const BoundVariant& v);

/// Computes q(F) and returns the bound value.
double kk_bound(const UpperSet& f, const BoundVariant& v, double tol = 1e-9);

/// kk_bound(F, v) < 1.
bool provides_nontrivial_info(const UpperSet& f, const BoundVariant& v, double tol = 1e-9);

/// ((2 dim)^-1, (2 dim)^(-1/ell)), with dim the unrestricted covering dimension.
std::pair<double, double> q_estimate_interval(int dim, Ell e);
std::pair<double, double> q_estimate_interval(const UpperSet& f);

/// One checked statement. `slack` is rhs - lhs of the inequality being
/// asserted, so a negative slack beyond `tolerance` is a violation.
/// Implications with a false premise are `vacuous`; checks whose inputs are
/// past computation caps are `skipped`. Neither carries a slack.
struct InequalityCheck {
  enum class Status { checked, vacuous, skipped };

  std::string name;
  bool holds = true;
  std::optional<double> slack;
  double tolerance = 0.0;
  Status status = Status::checked;
};

std::string_view to_string(InequalityCheck::Status s);

struct SigmaEntry {
  int k = 0;
  bool empty = false;
};

struct BoundReport {
  BoundVariant variant;
  int ground_size = 0;
  std::size_t min_count = 0;
  double q = 0.0;
  double p_c = 0.0;
  MuMethod pc_method = MuMethod::enumeration;
  int ell0 = 0;
  int ell = 0;
  std::optional<int> dim_unrestricted;
  std::optional<int> dim_within_family;
  int dim_sigma_bound = 0;
  bool common_intersection_empty = false;
  double bound_value = 0.0;
  double width = 0.0;  // bound_value - q = (K log(argument) - 1) q
  bool nontrivial_info = false;
  std::optional<std::pair<double, double>> q_interval;
  std::vector<SigmaEntry> sigma_profile;
  std::vector<InequalityCheck> inequality_checks;
  std::vector<std::string> notes;
  /// Optional Monte Carlo cross-check of mu at p_c.
  std::optional<MuEstimate> mu_at_pc_mc;

  bool all_hold() const;
};

struct VerifyOptions {
  double tol = 1e-9;
  /// Exact method for p_c; nullopt picks automatically.
  std::optional<MuMethod> pc_method;
  /// When set, also estimate mu at p_c by Monte Carlo.
  std::optional<McParams> mc;
  CoverSearchLimits cover_limits;
  /// Replaces the computed q. Only for exercising the checker itself.
  std::optional<double> q_override;
};

/// Computes every quantity for F and checks each inequality and implication
/// that applies to a single instance.
BoundReport verify_instance(const UpperSet& f, const BoundVariant& v, const VerifyOptions& options = {});

}  // namespace kkb

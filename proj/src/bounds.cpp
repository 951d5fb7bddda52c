#include "kkb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kkb/error.hpp"

namespace kkb {

std::string_view to_string(LogBase b) { return b == LogBase::two ? "2" : "e"; }
std::string_view to_string(BoundArgument a) { return a == BoundArgument::ell ? "ell" : "2ell0"; }

std::string_view to_string(InequalityCheck::Status s) {
  switch (s) {
    case InequalityCheck::Status::checked: return "checked";
    case InequalityCheck::Status::vacuous: return "vacuous";
    case InequalityCheck::Status::skipped: return "skipped";
  }
  return "unknown";
}

BoundVariant BoundVariant::kk_log_ell(double K) { return {"kk_log_ell", K, LogBase::two, BoundArgument::ell}; }
BoundVariant BoundVariant::bell() { return {"bell_8_log_2ell0", 8.0, LogBase::two, BoundArgument::two_ell0}; }
BoundVariant BoundVariant::park_vondrak() {
  return {"park_vondrak_4p5", 4.5, LogBase::two, BoundArgument::two_ell0};
}
BoundVariant BoundVariant::custom(double K, LogBase base, BoundArgument argument) {
  if (!(K > 0.0)) throw Error(ErrorCode::InvalidArgument, "K must be positive");
  return {"custom", K, base, argument};
}

std::vector<BoundVariant> BoundVariant::presets() { return {kk_log_ell(), bell(), park_vondrak()}; }

double log_in_base(double x, LogBase base) { return base == LogBase::two ? std::log2(x) : std::log(x); }

double bound_argument(Ell e, BoundArgument a) {
  return a == BoundArgument::ell ? static_cast<double>(e.ell) : 2.0 * e.ell0;
}

double bound_value(double q, Ell e, const BoundVariant& v) {
  return v.K * q * log_in_base(bound_argument(e, v.argument), v.log_base);
}

double kk_bound(const UpperSet& f, const BoundVariant& v, double tol) {
  return bound_value(expectation_threshold(f, tol).q, f.ell(), v);
}

bool provides_nontrivial_info(const UpperSet& f, const BoundVariant& v, double tol) {
  return kk_bound(f, v, tol) < 1.0;
}

std::pair<double, double> q_estimate_interval(int dim, Ell e) {
  const double two_dim = 2.0 * dim;
  return {1.0 / two_dim, std::pow(two_dim, -1.0 / e.ell)};
}

std::pair<double, double> q_estimate_interval(const UpperSet& f) {
  return q_estimate_interval(covering_dimension(f).dim, f.ell());
}

bool BoundReport::all_hold() const {
  return std::all_of(inequality_checks.begin(), inequality_checks.end(),
                     [](const InequalityCheck& c) { return c.holds; });
}

namespace {

using Status = InequalityCheck::Status;

InequalityCheck checked(std::string name, double slack, double tolerance) {
  return {std::move(name), slack >= -tolerance, slack, tolerance, Status::checked};
}

InequalityCheck vacuous(std::string name) { return {std::move(name), true, std::nullopt, 0.0, Status::vacuous}; }
InequalityCheck skipped(std::string name) { return {std::move(name), true, std::nullopt, 0.0, Status::skipped}; }

}  // namespace

BoundReport verify_instance(const UpperSet& f, const BoundVariant& v, const VerifyOptions& options) {
  const double tol = options.tol;
  BoundReport r;
  r.variant = v;
  r.ground_size = f.ground_size();
  r.min_count = f.min_count();
  const Ell e = f.ell();
  r.ell0 = e.ell0;
  r.ell = e.ell;
  const int m = static_cast<int>(f.min_count());

  const ExpectationThreshold et = expectation_threshold(f, tol, options.cover_limits);
  r.q = options.q_override.value_or(et.q);
  r.pc_method = options.pc_method.value_or(auto_exact_method(f));
  const CriticalProbability pc = critical_probability(f, tol, r.pc_method);
  r.p_c = pc.p_c;
  if (options.mc) r.mu_at_pc_mc = mu(f, r.p_c, MuMethod::monte_carlo, options.mc);

  const double log_arg = log_in_base(bound_argument(e, v.argument), v.log_base);
  r.bound_value = v.K * r.q * log_arg;
  r.width = r.bound_value - r.q;
  r.nontrivial_info = r.bound_value < 1.0;
  r.common_intersection_empty = f.common_intersection().empty();

  for (int k = 1; k <= m; ++k) r.sigma_profile.push_back({k, sigma_k(f.minimals(), k).value.empty()});
  r.dim_sigma_bound = dim_upper_bound_via_sigma(f);
  const int t_max_index = max_nonempty_sigma_index(f);

  if (f.min_count() <= kDimMinimalCap) {
    r.dim_unrestricted = covering_dimension(f, DimConvention::unrestricted).dim;
    r.dim_within_family = covering_dimension(f, DimConvention::within_family).dim;
    r.q_interval = q_estimate_interval(*r.dim_unrestricted, e);
  }

  auto& checks = r.inequality_checks;
  const double bound_tol = 2.0 * tol * std::max(1.0, v.K * log_arg);

  checks.push_back(checked("sandwich_left", r.p_c - r.q, 2.0 * tol));
  checks.push_back(checked("sandwich_right", r.bound_value - r.p_c, bound_tol + tol));
  checks.push_back(checked("pc_residual", tol - pc.residual, 0.0));
  {
    const double cost = et.witness_cover.cost(std::max(0.0, r.q - tol));
    auto c = checked("q_witness", 0.5 - cost, 0.0);
    c.holds = c.holds && et.witness_cover.covers(f);
    checks.push_back(std::move(c));
  }

  if (r.q_interval) {
    checks.push_back(checked("q_estimate_lower", r.q - r.q_interval->first, tol));
    checks.push_back(checked("q_estimate_upper", r.q_interval->second - r.q, tol));
  } else {
    checks.push_back(skipped("q_estimate_lower"));
    checks.push_back(skipped("q_estimate_upper"));
  }

  if (r.dim_unrestricted) {
    const int dim = *r.dim_unrestricted;
    // sigma_m nonempty must force dim <= |F0| - m + 1, for every m.
    bool dim_ineq_holds = true;
    for (const auto& s : r.sigma_profile) {
      if (dim > m - s.k + 1 && !s.empty) dim_ineq_holds = false;
    }
    const double formula_slack = static_cast<double>(m + 1 - t_max_index - dim);
    auto dim_ineq = checked("dim_inequality", formula_slack, 0.0);
    dim_ineq.holds = dim_ineq.holds && dim_ineq_holds;
    checks.push_back(std::move(dim_ineq));
    checks.push_back(checked("dim_formula", formula_slack, 0.0));

    // sigma_{|F0|-t} nonempty must force dim <= t + 1.
    std::optional<double> t_slack;
    bool t_holds = true;
    for (int t = 0; t < m; ++t) {
      if (r.sigma_profile[static_cast<std::size_t>(m - t - 1)].empty) continue;
      const double s = static_cast<double>(t + 1 - dim);
      t_slack = t_slack ? std::min(*t_slack, s) : s;
      t_holds = t_holds && s >= 0;
    }
    if (t_slack) {
      checks.push_back({"sigma_all_but_t", t_holds, t_slack, 0.0, Status::checked});
    } else {
      checks.push_back(vacuous("sigma_all_but_t"));
    }

    const int dim_f = *r.dim_within_family;
    checks.push_back(checked("dim_order", std::min(dim_f - dim, m - dim_f), 0.0));

    const double premise_rhs = 0.5 * std::pow(v.K * log_arg, e.ell);
    if (dim > premise_rhs) {
      checks.push_back(checked("dim_sufficient_condition", 1.0 - r.bound_value, bound_tol));
    } else {
      checks.push_back(vacuous("dim_sufficient_condition"));
    }
  } else {
    for (const char* name :
         {"dim_inequality", "dim_formula", "sigma_all_but_t", "dim_order", "dim_sufficient_condition"}) {
      checks.push_back(skipped(name));
    }
  }

  // The no-go statements lean on log(argument) >= 1, i.e. base 2.
  const bool nogo_applies = v.log_base == LogBase::two && v.K >= 2.0;
  if (!nogo_applies) {
    checks.push_back(skipped("intersection_no_go"));
    checks.push_back(skipped("principal_no_info"));
  } else {
    if (!r.common_intersection_empty) {
      checks.push_back(checked("intersection_no_go", r.bound_value - 1.0, bound_tol));
    } else {
      checks.push_back(vacuous("intersection_no_go"));
    }
    if (m == 1) {
      checks.push_back(checked("principal_no_info", r.bound_value - 1.0, bound_tol));
    } else {
      checks.push_back(vacuous("principal_no_info"));
    }
  }

  if (f.ground_size() <= kAutoEnumerationGroundCap && f.min_count() <= kAutoInclusionExclusionCap) {
    const double a = mu(f, r.p_c, MuMethod::enumeration).value;
    const double b = mu(f, r.p_c, MuMethod::inclusion_exclusion).value;
    checks.push_back(checked("mu_methods_agree", -std::abs(a - b), 1e-12));
  } else {
    checks.push_back(skipped("mu_methods_agree"));
  }

  if (v.K < kUnconditionalK) {
    r.notes.push_back("K below 4.5: constants this small are only known along sequences with ell -> infinity");
  }
  if (v.log_base == LogBase::e) {
    r.notes.push_back("natural log: no-go checks that need log(argument) >= 1 are skipped");
  }
  if (options.q_override) r.notes.push_back("q overridden by caller");
  return r;
}

}  // namespace kkb

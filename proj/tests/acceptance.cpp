// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "kkb/bounds.hpp"
#include "kkb/families.hpp"
#include "kkb/io.hpp"
#include "kkb/sequence.hpp"
#include "kkb/structure.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct BatteryRun {
  std::vector<kkb::NamedInstance> instances;
  std::vector<kkb::BoundReport> reports;
  double seconds = 0.0;
};

BatteryRun run_battery() {
  BatteryRun run;
  const auto t0 = Clock::now();
  run.instances = kkb::builtin_battery();
  for (const auto& inst : run.instances) {
    run.reports.push_back(kkb::verify_instance(inst.instance, kkb::BoundVariant::bell()));
  }
  run.seconds = seconds_since(t0);
  return run;
}

std::string battery_json(const BatteryRun& run) {
  std::string out;
  for (std::size_t i = 0; i < run.instances.size(); ++i) {
    out += run.instances[i].name + '\t' + kkb::report_to_json(run.reports[i]).dump() + '\n';
  }
  return out;
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

// q <= p_c on the whole battery, inside the time budget.
Outcome sandwich_left(const BatteryRun& b) {
  std::size_t bad = 0;
  for (const auto& r : b.reports) {
    if (r.q > r.p_c + 2e-9) ++bad;
  }
  Outcome o;
  o.pass = bad == 0 && b.instances.size() >= 200 && b.seconds <= 60.0;
  o.detail = std::to_string(b.instances.size()) + " instances, " + std::to_string(bad) + " violations, " +
             fmt("%.2f s", b.seconds);
  return o;
}

// p_c <= 8 q log2(2 ell0) on the whole battery.
Outcome sandwich_right(const BatteryRun& b) {
  std::size_t bad = 0;
  double min_slack = 1e300;
  for (const auto& r : b.reports) {
    const double rhs = 8.0 * r.q * std::log2(2.0 * r.ell0);
    min_slack = std::min(min_slack, rhs - r.p_c);
    if (r.p_c > rhs + 1e-9) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " violations, smallest slack " + fmt("%.3g", min_slack)};
}

// (2 dim)^-1 <= q <= (2 dim)^(-1/ell) with the brute-force unrestricted dimension.
Outcome q_estimate(const BatteryRun& b) {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < b.instances.size(); ++i) {
    const auto& f = b.instances[i].instance;
    if (f.min_count() > 16) continue;
    const int dim = oracle::unrestricted_dimension(f.ground_size(), oracle::masks_of(f));
    const double q = b.reports[i].q;
    const double lo = 1.0 / (2.0 * dim);
    const double hi = std::pow(2.0 * dim, -1.0 / f.ell().ell);
    ++checked;
    if (q < lo - 1e-9 || q > hi + 1e-9 || b.reports[i].dim_unrestricted != dim) ++bad;
  }
  // Boundary cases: the interval is attained.
  const auto principal3 = kkb::principal(4, kkb::SubsetMask::of(4, {0, 1, 2}));
  const double q_p = kkb::expectation_threshold(principal3).q;
  const double upper_slack = std::abs(q_p - std::pow(2.0, -1.0 / 3.0));
  const auto singles = kkb::disjoint_blocks(2, 1);
  const double q_s = kkb::expectation_threshold(singles).q;
  const double lower_slack = std::abs(q_s - 0.25);
  const bool boundary = upper_slack <= 1e-9 && lower_slack <= 1e-9;
  return {bad == 0 && boundary, std::to_string(checked) + " instances, " + std::to_string(bad) +
                                    " violations; boundary slacks " + fmt("%.2g", upper_slack) + ", " +
                                    fmt("%.2g", lower_slack)};
}

// Closed forms for principal families and the triangle, each also re-derived
// by the brute-force oracles.
Outcome exact_values() {
  double worst = 0.0;
  bool ok = true;
  for (int k = 1; k <= 6; ++k) {
    const auto f = kkb::principal(k + 1, kkb::SubsetMask(k + 1, (std::uint64_t{1} << k) - 1));
    const double expected = std::pow(2.0, -1.0 / k);
    const double q = kkb::expectation_threshold(f).q;
    const double pc = kkb::critical_probability(f).p_c;
    const double q_oracle = oracle::expectation_threshold(oracle::masks_of(f));
    const double pc_oracle = oracle::critical_probability(f.ground_size(), oracle::masks_of(f));
    for (double got : {q, pc, q_oracle, pc_oracle}) worst = std::max(worst, std::abs(got - expected));
  }
  ok = worst <= 1e-8;
  const auto k3 = kkb::graph_connectivity(3);
  const double pc = kkb::critical_probability(k3).p_c;
  const double q = kkb::expectation_threshold(k3).q;
  const double pc_oracle = oracle::critical_probability(3, oracle::masks_of(k3));
  const double q_oracle = oracle::expectation_threshold(oracle::masks_of(k3));
  ok = ok && std::abs(pc - pc_oracle) <= 1e-9 && std::abs(pc - 0.5) <= 1e-9;
  ok = ok && std::abs(q - q_oracle) <= 1e-8 && std::abs(q - 1.0 / std::sqrt(6.0)) <= 1e-8;
  return {ok, "principal k=1..6 worst error " + fmt("%.2g", worst) + "; triangle p_c " + fmt("%.12g", pc) +
                  " (oracle " + fmt("%.12g", pc_oracle) + "), q " + fmt("%.12g", q) + " (oracle " +
                  fmt("%.12g", q_oracle) + ")"};
}

// Counting characterization of sigma_k against naive enumeration.
Outcome sigma_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(5);
  std::size_t mismatches = 0;
  std::size_t comparisons = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const int m = 1 + static_cast<int>(rng() % 12);
    std::vector<kkb::SubsetMask> sets;
    std::vector<std::uint64_t> raw;
    for (int i = 0; i < m; ++i) {
      const std::uint64_t bits = rng() & ((std::uint64_t{1} << n) - 1);
      sets.emplace_back(n, bits);
      raw.push_back(bits);
    }
    for (int k = 1; k <= m; ++k) {
      ++comparisons;
      if (kkb::sigma_k(sets, k).value.bits() != oracle::sigma(raw, k)) ++mismatches;
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs <= 10.0, std::to_string(comparisons) + " comparisons, " +
                                                std::to_string(mismatches) + " mismatches, " + fmt("%.2f s", secs)};
}

// dim <= |F0| + 1 - t and its contrapositive for every m.
Outcome dim_inequality(const BatteryRun& b) {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (const auto& inst : b.instances) {
    const auto& f = inst.instance;
    if (f.min_count() > 10) continue;
    const auto raw = oracle::masks_of(f);
    const int m0 = static_cast<int>(raw.size());
    const int dim = kkb::covering_dimension(f).dim;
    if (dim != oracle::unrestricted_dimension(f.ground_size(), raw)) ++bad;
    int t = 0;
    for (int k = 1; k <= m0; ++k) {
      if (oracle::sigma(raw, k) != 0) t = k;
    }
    if (dim > m0 + 1 - t) ++bad;
    for (int m = 1; m <= m0; ++m) {
      if (dim > m0 + 1 - m && oracle::sigma(raw, m) != 0) ++bad;
    }
    ++checked;
  }
  return {bad == 0, std::to_string(checked) + " instances, " + std::to_string(bad) + " violations"};
}

// A nonempty common intersection rules out nontrivial information for K >= 2.
Outcome intersection_no_go(const BatteryRun& b) {
  std::vector<kkb::BoundVariant> variants = kkb::BoundVariant::presets();
  variants.push_back(kkb::BoundVariant::custom(2.0, kkb::LogBase::two, kkb::BoundArgument::ell));
  variants.push_back(kkb::BoundVariant::custom(2.0, kkb::LogBase::two, kkb::BoundArgument::two_ell0));
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < b.instances.size(); ++i) {
    const auto& f = b.instances[i].instance;
    if (f.common_intersection().empty()) continue;
    for (const auto& v : variants) {
      ++checked;
      // q carries a bisection error of at most 1e-9.
      const double slack = v.K * kkb::log_in_base(kkb::bound_argument(f.ell(), v.argument), v.log_base) * 1e-9;
      if (kkb::bound_value(b.reports[i].q, f.ell(), v) < 1.0 - slack) ++bad;
    }
  }
  const auto records = kkb::sweep({"principal", 1, 8, 0}, kkb::BoundVariant::bell(), 1);
  const auto kind = kkb::information_classification(records).kind;
  const bool never = kind == kkb::Classification::Kind::never_nontrivial;
  return {bad == 0 && never && checked > 0, std::to_string(checked) + " instance/variant pairs, " +
                                                std::to_string(bad) + " counterexamples; principal sweep " +
                                                std::string(kkb::to_string(kind))};
}

// Spanning tree counts.
Outcome cayley() {
  const std::size_t expected[] = {3, 16, 125, 1296};
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 6; ++n) {
    const auto f = kkb::graph_connectivity(n);
    const std::size_t brute = oracle::spanning_tree_count(n);
    ok = ok && f.min_count() == expected[n - 3] && brute == expected[n - 3] && f.ell().ell0 == n - 1;
    detail += (detail.empty() ? "" : ", ") + std::to_string(f.min_count());
  }
  return {ok, "minimal counts " + detail};
}

// Exact methods agree; Monte Carlo lands within 4 standard deviations.
Outcome mu_agreement(const BatteryRun& b) {
  std::vector<const kkb::UpperSet*> eligible;
  for (const auto& inst : b.instances) {
    if (inst.instance.ground_size() <= 12 && inst.instance.min_count() <= 10) eligible.push_back(&inst.instance);
  }
  const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  double worst = 0.0;
  for (const auto* f : eligible) {
    for (double p : ps) {
      const double a = kkb::mu(*f, p, kkb::MuMethod::enumeration).value;
      const double c = kkb::mu(*f, p, kkb::MuMethod::inclusion_exclusion).value;
      worst = std::max(worst, std::abs(a - c));
    }
  }
  int inside = 0;
  const int trials = 100;
  const std::uint64_t samples = 100000;
  for (int i = 0; i < trials; ++i) {
    const auto& f = *eligible[static_cast<std::size_t>(i * 7) % eligible.size()];
    const double p = ps[i % 5];
    const double exact = kkb::mu(f, p, kkb::MuMethod::enumeration).value;
    const auto est = kkb::mu(f, p, kkb::MuMethod::monte_carlo, kkb::McParams{samples, 1000 + static_cast<std::uint64_t>(i)});
    const double sd = std::sqrt(exact * (1.0 - exact) / static_cast<double>(samples));
    if (std::abs(est.value - exact) <= 4.0 * sd) ++inside;
  }
  const bool ok = worst <= 1e-12 && inside >= 99;
  return {ok, std::to_string(eligible.size()) + " instances, max exact disagreement " + fmt("%.2g", worst) +
                  "; Monte Carlo inside 4 sd in " + std::to_string(inside) + "/" + std::to_string(trials)};
}

// Exact cover search against the brute-force cover oracles.
Outcome set_cover(const BatteryRun& b) {
  std::size_t instances = 0;
  std::size_t comparisons = 0;
  std::size_t all_subsets = 0;
  std::size_t mismatches = 0;
  for (const auto& inst : b.instances) {
    const auto& f = inst.instance;
    if (f.min_count() > 5 || f.ell().ell0 > 4) continue;
    ++instances;
    const auto raw = oracle::masks_of(f);
    const bool small = oracle::candidates(raw).size() <= 20;
    for (double p : {0.1, 0.3, 0.5}) {
      const double got = kkb::min_cover_cost(f, p).cost;
      const double want = oracle::min_cover_cost_by_assignment(raw, p);
      ++comparisons;
      if (std::abs(got - want) > 1e-12 * std::max(1.0, want)) ++mismatches;
      if (small) {
        ++all_subsets;
        if (std::abs(got - oracle::min_cover_cost_all_subsets(raw, p)) > 1e-12 * std::max(1.0, want)) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(instances) + " instances, " + std::to_string(comparisons) +
                               " comparisons (" + std::to_string(all_subsets) + " also against all subfamilies), " +
                               std::to_string(mismatches) + " mismatches"};
}

// Finite substitute for the asymptotic example: the two dimension conventions
// on the triangle.
Outcome dimension_conventions() {
  const auto k3 = kkb::graph_connectivity(3);
  const int within = kkb::covering_dimension(k3, kkb::DimConvention::within_family).dim;
  const int unrestricted = kkb::covering_dimension(k3, kkb::DimConvention::unrestricted).dim;
  const auto raw = oracle::masks_of(k3);
  const int within_oracle = oracle::within_family_dimension(raw);
  const int unrestricted_oracle = oracle::unrestricted_dimension(3, raw);
  const int k4_within = kkb::covering_dimension(kkb::graph_connectivity(4), kkb::DimConvention::within_family).dim;
  const bool ok = within == 3 && within_oracle == 3 && unrestricted == 2 && unrestricted_oracle == 2 && k4_within == 16;
  return {ok, "n=3 within_family " + std::to_string(within) + " (oracle " + std::to_string(within_oracle) +
                  "), unrestricted " + std::to_string(unrestricted) + " (oracle " +
                  std::to_string(unrestricted_oracle) + "); n=4 within_family " + std::to_string(k4_within) +
                  "; the n -> infinity statement is not checked"};
}

std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  kkb::cli::run(args, out, err);
  return out.str() + "\x1e" + err.str();
}

// Byte-identical output on repetition.
Outcome determinism(const BatteryRun& first) {
  const BatteryRun second = run_battery();
  const bool battery_same = battery_json(first) == battery_json(second);
  bool sweeps_same = true;
  for (const char* family : {"connectivity", "random", "triangle"}) {
    const auto a = kkb::sweep({family, 3, 5, 17}, kkb::BoundVariant::bell(), 2);
    const auto c = kkb::sweep({family, 3, 5, 17}, kkb::BoundVariant::bell(), 2);
    sweeps_same = sweeps_same && kkb::sweep_csv(a, 2) == kkb::sweep_csv(c, 2);
  }
  const std::vector<std::vector<std::string>> commands = {
      {"sweep", "--family", "random", "--range", "4..8", "--seed", "3"},
      {"sweep", "--family", "star", "--range", "3..5", "--format", "json"},
      {"verify", "--battery", "builtin"},
  };
  bool cli_same = true;
  for (const auto& cmd : commands) cli_same = cli_same && cli_output(cmd) == cli_output(cmd);
  return {battery_same && sweeps_same && cli_same,
          std::string("battery JSON ") + (battery_same ? "identical" : "differs") + ", sweep CSV " +
              (sweeps_same ? "identical" : "differs") + ", CLI output " + (cli_same ? "identical" : "differs")};
}

}  // namespace

int main() {
  const BatteryRun battery = run_battery();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"q <= p_c on the battery", [&] { return sandwich_left(battery); }},
      {"p_c <= 8 q log2(2 ell0) on the battery", [&] { return sandwich_right(battery); }},
      {"q between (2 dim)^-1 and (2 dim)^(-1/ell)", [&] { return q_estimate(battery); }},
      {"exact values for principal families and the triangle", exact_values},
      {"sigma_k counting equals naive enumeration", sigma_equivalence},
      {"dimension inequality and sigma emptiness", [&] { return dim_inequality(battery); }},
      {"no nontrivial information with a common element", [&] { return intersection_no_go(battery); }},
      {"spanning tree counts", cayley},
      {"measure methods agree", [&] { return mu_agreement(battery); }},
      {"cover search equals brute-force covers", [&] { return set_cover(battery); }},
      {"dimension conventions on the triangle", dimension_conventions},
      {"deterministic output", [&] { return determinism(battery); }},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", index - failures, criteria.size());
  return failures;
}

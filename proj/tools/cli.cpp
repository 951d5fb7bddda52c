#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "kkb/bounds.hpp"
#include "kkb/error.hpp"
#include "kkb/families.hpp"
#include "kkb/io.hpp"
#include "kkb/sequence.hpp"

namespace kkb::cli {

namespace {

struct Config {
  std::string instance_path;
  std::string family;
  std::string range;
  std::string battery;
  int family_n = 0;

  std::string variant = "bell";
  std::optional<double> K;
  std::string log_base;
  std::string argument;

  double tol = 1e-9;
  std::string method = "auto";
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  int t_max = 2;
  std::string dim_convention = "unrestricted";
  std::string format;
  std::string summary_path;
  std::optional<double> override_q;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BoundVariant make_variant(const Config& c) {
  BoundVariant v;
  if (c.variant == "bell") {
    v = BoundVariant::bell();
  } else if (c.variant == "park-vondrak" || c.variant == "park_vondrak") {
    v = BoundVariant::park_vondrak();
  } else if (c.variant == "kk" || c.variant == "kk_log_ell") {
    v = BoundVariant::kk_log_ell();
  } else {
    throw UsageError("unknown variant '" + c.variant + "'");
  }
  const bool customised = c.K || !c.log_base.empty() || !c.argument.empty();
  if (!customised) return v;
  if (c.K) v.K = *c.K;
  if (c.log_base == "e") v.log_base = LogBase::e;
  if (c.log_base == "2") v.log_base = LogBase::two;
  if (c.argument == "ell") v.argument = BoundArgument::ell;
  if (c.argument == "2ell0") v.argument = BoundArgument::two_ell0;
  if (!(v.K > 0.0)) throw UsageError("--K must be positive");
  v.name = "custom";
  return v;
}

std::optional<MuMethod> exact_method(const Config& c) {
  if (c.method == "enum") return MuMethod::enumeration;
  if (c.method == "ie") return MuMethod::inclusion_exclusion;
  return std::nullopt;
}

std::optional<McParams> mc_params(const Config& c) {
  if (c.method != "mc") return std::nullopt;
  if (!c.samples || *c.samples == 0) {
    throw Error(ErrorCode::MissingMcParams, "--method mc needs --samples N (N >= 1)");
  }
  return McParams{*c.samples, c.seed};
}

UpperSet load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--range must look like A..B");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int from = std::stoi(a, &used_a);
    const int to = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw UsageError("--range must look like A..B");
    return {from, to};
  } catch (const std::logic_error&) {
    throw UsageError("--range must look like A..B");
  }
}

VerifyOptions verify_options(const Config& c) {
  VerifyOptions o;
  o.tol = c.tol;
  o.pc_method = exact_method(c);
  o.mc = mc_params(c);
  o.q_override = c.override_q;
  return o;
}

int cmd_compute(const Config& c, std::ostream& out) {
  const UpperSet f = load_instance(c.instance_path);
  const BoundVariant v = make_variant(c);
  const BoundReport r = verify_instance(f, v, verify_options(c));
  OrderedJson j = report_to_json(r);
  const bool within = c.dim_convention == "within-family";
  const std::optional<int>& dim = within ? r.dim_within_family : r.dim_unrestricted;
  OrderedJson selected;
  selected["convention"] = within ? "within_family" : "unrestricted";
  selected["dim"] = dim ? OrderedJson(*dim) : OrderedJson(nullptr);
  j["selected_dim"] = std::move(selected);
  if (c.format == "csv") {
    out << "field,value\n";
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive()) out << key << ',' << value.dump() << '\n';
    }
  } else {
    out << j.dump(2) << '\n';
  }
  return kOk;
}

int cmd_sweep(const Config& c, std::ostream& out, std::ostream& err) {
  const auto [from, to] = parse_range(c.range);
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), c.family) == names.end()) {
    throw UsageError("unknown family '" + c.family + "'");
  }
  if (c.t_max < 0) throw UsageError("--t-max must be >= 0");
  const BoundVariant v = make_variant(c);
  SweepOptions options;
  options.tol = c.tol;
  const auto records = sweep({c.family, from, to, c.seed}, v, c.t_max, options);

  OrderedJson summary;
  summary["family"] = c.family;
  summary["range"] = OrderedJson::array({from, to});
  summary["variant"] = variant_to_json(v);
  summary["records"] = records.size();
  if (records.empty()) {
    summary["necessary_conditions"] = nullptr;
  } else {
    summary["necessary_conditions"] = necessary_conditions_to_json(necessary_conditions_report(records, v));
  }
  if (records.size() < 3) {
    summary["classification"] = nullptr;
  } else {
    summary["classification"] = classification_to_json(information_classification(records));
  }
  OrderedJson row_errors = OrderedJson::array();
  for (const auto& r : records) {
    for (const auto& e : r.errors) row_errors.push_back(OrderedJson{{"n", r.n}, {"error", e}});
  }
  summary["row_errors"] = std::move(row_errors);

  if (c.format == "json") {
    OrderedJson rows = OrderedJson::array();
    const std::string csv = sweep_csv(records, c.t_max);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    std::vector<std::string> cols;
    {
      std::istringstream h(header);
      for (std::string col; std::getline(h, col, ',');) cols.push_back(col);
    }
    for (std::string line; std::getline(lines, line);) {
      OrderedJson row;
      std::istringstream cells(line);
      std::size_t i = 0;
      std::string cell;
      while (i < cols.size()) {
        if (!std::getline(cells, cell, ',')) cell.clear();
        row[cols[i++]] = cell.empty() ? OrderedJson(nullptr) : OrderedJson::parse(cell);
      }
      rows.push_back(std::move(row));
    }
    out << OrderedJson{{"rows", rows}, {"summary", summary}}.dump(2) << '\n';
    return kOk;
  }

  out << sweep_csv(records, c.t_max);
  if (!c.summary_path.empty()) {
    std::ofstream side(c.summary_path);
    if (!side) throw Error(ErrorCode::ParseError, "cannot write '" + c.summary_path + "'");
    side << summary.dump() << '\n';
  } else {
    err << summary.dump() << '\n';
  }
  return kOk;
}

void print_checks(std::ostream& out, const std::string& label, const BoundReport& r) {
  for (const auto& c : r.inequality_checks) {
    out << std::left << std::setw(34) << label << ' ' << std::setw(26) << c.name << ' ' << std::setw(8)
        << to_string(c.status) << ' ' << (c.holds ? "ok  " : "FAIL") << ' '
        << (c.slack ? format_number(*c.slack) : std::string("-")) << '\n';
  }
}

int cmd_verify(const Config& c, std::ostream& out) {
  const BoundVariant v = make_variant(c);
  const VerifyOptions options = verify_options(c);
  std::vector<NamedInstance> instances;
  if (!c.battery.empty()) {
    if (c.battery != "builtin") throw UsageError("only --battery builtin exists");
    instances = builtin_battery();
  } else {
    instances.push_back({c.instance_path, load_instance(c.instance_path)});
  }
  std::size_t failures = 0;
  std::size_t checks = 0;
  out << "instance                           check                      status   holds slack\n";
  for (const auto& inst : instances) {
    const BoundReport r = verify_instance(inst.instance, v, options);
    print_checks(out, inst.name, r);
    for (const auto& check : r.inequality_checks) {
      ++checks;
      if (!check.holds) ++failures;
    }
  }
  out << "instances " << instances.size() << ", checks " << checks << ", violations " << failures << '\n';
  return failures == 0 ? kOk : kViolation;
}

int cmd_family(const Config& c, std::ostream& out) {
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), c.family) == names.end()) {
    throw UsageError("unknown family '" + c.family + "'");
  }
  out << instance_to_json(family_instance(c.family, c.family_n, c.seed)).dump() << '\n';
  return kOk;
}

void add_variant_flags(CLI::App* app, Config& c) {
  app->add_option("--variant", c.variant, "Preset: bell, park-vondrak, kk")->capture_default_str();
  app->add_option("--K", c.K, "Constant K (switches to a custom variant)");
  app->add_option("--log-base", c.log_base, "Logarithm base")->check(CLI::IsMember({"2", "e"}));
  app->add_option("--arg", c.argument, "Logarithm argument")->check(CLI::IsMember({"ell", "2ell0"}));
  app->add_option("--tol", c.tol, "Bisection tolerance")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_method_flags(CLI::App* app, Config& c) {
  app->add_option("--method", c.method, "mu method for p_c")
      ->check(CLI::IsMember({"enum", "ie", "mc", "auto"}))
      ->capture_default_str();
  app->add_option("--samples", c.samples, "Monte Carlo samples");
  app->add_option("--seed", c.seed, "Seed for Monte Carlo and random families")->capture_default_str();
  app->add_option("--dim-convention", c.dim_convention, "Covering dimension convention")
      ->check(CLI::IsMember({"unrestricted", "within-family"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Expectation thresholds, critical probabilities and threshold bounds for upper sets", "kkb"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute every quantity and check for one instance");
  compute->add_option("--instance", c.instance_path, "Instance JSON file")->required();
  add_variant_flags(compute, c);
  add_method_flags(compute, c);
  compute->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a family over a range of n");
  sweep_cmd->add_option("--family", c.family, "Family name")->required();
  sweep_cmd->add_option("--range", c.range, "Inclusive range A..B")->required();
  sweep_cmd->add_option("--t-max", c.t_max, "Largest t for sigma_{|F0|-t} columns")->capture_default_str();
  sweep_cmd->add_option("--summary", c.summary_path, "Write the JSON summary here instead of stderr");
  sweep_cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  add_variant_flags(sweep_cmd, c);
  sweep_cmd->add_option("--seed", c.seed, "Seed for the random family")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check every inequality; exit 1 on any violation");
  auto* inst_opt = verify->add_option("--instance", c.instance_path, "Instance JSON file");
  auto* battery_opt = verify->add_option("--battery", c.battery, "Built-in battery name (builtin)");
  inst_opt->excludes(battery_opt);
  verify->add_option("--override-q", c.override_q, "Replace the computed q (checker self-test)");
  add_variant_flags(verify, c);
  add_method_flags(verify, c);

  auto* family = app.add_subcommand("family", "Print a generated instance as JSON");
  family->add_option("--family", c.family, "Family name")->required();
  family->add_option("--n", c.family_n, "Family parameter")->required();
  family->add_option("--seed", c.seed, "Seed for the random family")->capture_default_str();

  std::vector<const char*> argv{"kkb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (*compute) return cmd_compute(c, out);
    if (*sweep_cmd) return cmd_sweep(c, out, err);
    if (*verify) {
      if (c.instance_path.empty() && c.battery.empty()) throw UsageError("verify needs --instance or --battery");
      return cmd_verify(c, out);
    }
    if (*family) return cmd_family(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_cap_error() ? kCapExceeded : kBadInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace kkb::cli

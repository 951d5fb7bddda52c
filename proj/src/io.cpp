#include "kkb/io.hpp"

#include <cstdio>
#include <cstdlib>

#include "kkb/error.hpp"

namespace kkb {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

double round12(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

UpperSet parse_instance(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
  const auto gs = doc.find("ground_size");
  const auto mins = doc.find("minimal_elements");
  if (gs == doc.end() || !gs->is_number_integer()) {
    throw Error(ErrorCode::ParseError, "\"ground_size\" must be an integer");
  }
  if (mins == doc.end() || !mins->is_array()) {
    throw Error(ErrorCode::ParseError, "\"minimal_elements\" must be an array");
  }
  bool normalize = false;
  if (const auto nf = doc.find("normalize"); nf != doc.end()) {
    if (!nf->is_boolean()) throw Error(ErrorCode::ParseError, "\"normalize\" must be a boolean");
    normalize = nf->get<bool>();
  }
  const long long n = gs->get<long long>();
  if (n < 1 || n > SubsetMask::kMaxWidth) throw Error(ErrorCode::ParseError, "ground_size out of range");
  const int width = static_cast<int>(n);

  std::vector<SubsetMask> masks;
  for (const auto& set : *mins) {
    if (!set.is_array()) throw Error(ErrorCode::ParseError, "each minimal element must be an array");
    std::uint64_t bits = 0;
    for (const auto& e : set) {
      if (!e.is_number_integer()) throw Error(ErrorCode::ParseError, "element indices must be integers");
      const long long i = e.get<long long>();
      if (i < 0 || i >= n) throw Error(ErrorCode::WidthMismatch, "element index outside the ground set");
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (bits & bit) throw Error(ErrorCode::ParseError, "repeated element index");
      bits |= bit;
    }
    masks.emplace_back(width, bits);
  }
  return normalize ? UpperSet::from_generators(width, masks) : UpperSet::from_antichain(width, masks);
}

OrderedJson instance_to_json(const UpperSet& f) {
  OrderedJson j;
  j["ground_size"] = f.ground_size();
  OrderedJson mins = OrderedJson::array();
  for (const auto& m : f.minimals()) mins.push_back(m.elements());
  j["minimal_elements"] = std::move(mins);
  return j;
}

OrderedJson variant_to_json(const BoundVariant& v) {
  OrderedJson j;
  j["name"] = v.name;
  j["K"] = round12(v.K);
  j["log_base"] = std::string(to_string(v.log_base));
  j["argument"] = std::string(to_string(v.argument));
  return j;
}

namespace {

template <typename T>
OrderedJson opt(const std::optional<T>& x) {
  if (!x) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    return round12(*x);
  } else {
    return *x;
  }
}

}  // namespace

OrderedJson report_to_json(const BoundReport& r) {
  OrderedJson j;
  j["variant"] = variant_to_json(r.variant);
  j["ground_size"] = r.ground_size;
  j["min_count"] = r.min_count;
  j["q"] = round12(r.q);
  j["p_c"] = round12(r.p_c);
  j["p_c_method"] = std::string(to_string(r.pc_method));
  j["ell0"] = r.ell0;
  j["ell"] = r.ell;
  j["dim_unrestricted"] = opt(r.dim_unrestricted);
  j["dim_within_family"] = opt(r.dim_within_family);
  j["dim_sigma_bound"] = r.dim_sigma_bound;
  j["common_intersection_empty"] = r.common_intersection_empty;
  j["bound_value"] = round12(r.bound_value);
  j["width"] = round12(r.width);
  j["nontrivial_info"] = r.nontrivial_info;
  if (r.q_interval) {
    j["q_interval"] = OrderedJson::array({round12(r.q_interval->first), round12(r.q_interval->second)});
  } else {
    j["q_interval"] = nullptr;
  }
  OrderedJson sigma = OrderedJson::array();
  for (const auto& s : r.sigma_profile) sigma.push_back(OrderedJson{{"k", s.k}, {"empty", s.empty}});
  j["sigma_profile"] = std::move(sigma);
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : r.inequality_checks) {
    OrderedJson cj;
    cj["name"] = c.name;
    cj["holds"] = c.holds;
    cj["slack"] = opt(c.slack);
    cj["tolerance"] = round12(c.tolerance);
    cj["status"] = std::string(to_string(c.status));
    checks.push_back(std::move(cj));
  }
  j["inequality_checks"] = std::move(checks);
  if (r.mu_at_pc_mc) {
    j["mu_at_pc_mc"] = OrderedJson{{"value", round12(r.mu_at_pc_mc->value)},
                                   {"std_error", round12(r.mu_at_pc_mc->std_error)},
                                   {"samples", r.mu_at_pc_mc->samples}};
  }
  j["notes"] = r.notes;
  return j;
}

OrderedJson necessary_conditions_to_json(const NecessaryConditionsReport& r) {
  OrderedJson j;
  OrderedJson onsets = OrderedJson::array();
  for (const auto& o : r.sigma_onsets) onsets.push_back(OrderedJson{{"t", o.t}, {"empty_from_n", opt(o.from_n)}});
  j["sigma_empty_onsets"] = std::move(onsets);
  j["min_count_strictly_increasing"] = r.min_count_strictly_increasing;
  j["dim_strictly_increasing"] = opt(r.dim_strictly_increasing);
  OrderedJson contra = OrderedJson::array();
  for (const auto& c : r.contradictions) contra.push_back(OrderedJson{{"n", c.n}, {"condition", c.condition}});
  j["contradictions"] = std::move(contra);
  return j;
}

OrderedJson classification_to_json(const Classification& c) {
  OrderedJson j;
  j["kind"] = std::string(to_string(c.kind));
  j["from_n"] = opt(c.from_n);
  j["note"] = c.note;
  return j;
}

}  // namespace kkb

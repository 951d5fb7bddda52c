#include "kkb/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kkb/error.hpp"
#include "kkb/families.hpp"
#include "kkb/io.hpp"

namespace kkb {

std::string_view to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::nontrivial_from_n: return "nontrivial_from_n";
    case Classification::Kind::perfect_trend: return "perfect_trend";
    case Classification::Kind::never_nontrivial: return "never_nontrivial";
    case Classification::Kind::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

template <typename Fn>
void attempt(SweepRecord& row, const char* what, Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    row.errors.push_back(std::string(what) + ": " + e.what());
  }
}

SweepRecord sweep_row(const FamilySpec& spec, int n, const BoundVariant& v, int t_max, const SweepOptions& options) {
  SweepRecord row;
  row.n = n;
  std::optional<UpperSet> f;
  attempt(row, "instance", [&] { f = family_instance(spec.name, n, spec.seed); });
  if (!f) return row;

  const Ell e = f->ell();
  const int m = static_cast<int>(f->min_count());
  row.min_count = f->min_count();
  row.ell0 = e.ell0;
  row.ell = e.ell;
  for (int t = 0; t <= t_max; ++t) {
    if (m - t < 1) {
      row.sigma_empty_at.emplace_back(std::nullopt);
    } else {
      row.sigma_empty_at.emplace_back(sigma_k(f->minimals(), m - t).value.empty());
    }
  }
  attempt(row, "dim", [&] {
    row.dim_unrestricted = covering_dimension(*f, DimConvention::unrestricted).dim;
    row.dim_within_family = covering_dimension(*f, DimConvention::within_family).dim;
  });
  attempt(row, "q", [&] { row.q = expectation_threshold(*f, options.tol, options.cover_limits).q; });
  attempt(row, "p_c", [&] { row.p_c = critical_probability(*f, options.tol, auto_exact_method(*f)).p_c; });
  if (row.q) {
    row.bound_value = bound_value(*row.q, e, v);
    row.width = *row.bound_value - *row.q;
    row.nontrivial_info = *row.bound_value < 1.0;
    row.ratio_perfect = *row.q * log_in_base(e.ell, v.log_base);
  }
  return row;
}

}  // namespace

std::vector<SweepRecord> sweep(const FamilySpec& spec, const BoundVariant& v, int t_max, const SweepOptions& options) {
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), spec.name) == names.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + spec.name + "'");
  }
  if (t_max < 0) throw Error(ErrorCode::InvalidArgument, "t_max must be >= 0");
  std::vector<SweepRecord> rows;
  for (int n = spec.from; n <= spec.to; ++n) rows.push_back(sweep_row(spec, n, v, t_max, options));
  return rows;
}

NecessaryConditionsReport necessary_conditions_report(std::span<const SweepRecord> records, const BoundVariant& v) {
  if (records.empty()) throw Error(ErrorCode::EmptyInput, "no sweep records");
  NecessaryConditionsReport r;

  std::size_t t_count = 0;
  for (const auto& row : records) t_count = std::max(t_count, row.sigma_empty_at.size());
  for (std::size_t t = 0; t < t_count; ++t) {
    SigmaEmptinessOnset onset{static_cast<int>(t), std::nullopt};
    // Walk backwards while the rows keep sigma empty.
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
      const bool empty = t < it->sigma_empty_at.size() && it->sigma_empty_at[t].value_or(false);
      if (!empty) break;
      onset.from_n = it->n;
    }
    r.sigma_onsets.push_back(onset);
  }

  r.min_count_strictly_increasing = true;
  std::optional<std::size_t> prev_count;
  for (const auto& row : records) {
    if (!row.min_count) {
      r.min_count_strictly_increasing = false;
      continue;
    }
    if (prev_count && *row.min_count <= *prev_count) r.min_count_strictly_increasing = false;
    prev_count = row.min_count;
  }

  std::vector<int> dims;
  for (const auto& row : records) {
    if (row.dim_unrestricted) dims.push_back(*row.dim_unrestricted);
  }
  if (dims.size() >= 2) {
    r.dim_strictly_increasing = std::adjacent_find(dims.begin(), dims.end(), std::greater_equal<>()) == dims.end();
  }

  if (v.K >= 2.0 && v.log_base == LogBase::two) {
    for (const auto& row : records) {
      if (!row.nontrivial_info.value_or(false)) continue;
      if (!row.sigma_empty_at.empty() && row.sigma_empty_at[0] == false) {
        r.contradictions.push_back({row.n, "minimal elements share an element"});
      }
      if (row.min_count == std::size_t{1}) {
        r.contradictions.push_back({row.n, "principal upper set"});
      }
    }
  }
  return r;
}

Classification information_classification(std::span<const SweepRecord> records, double window_fraction) {
  if (records.size() < 3) throw Error(ErrorCode::TooFewRecords, "classification needs at least 3 records");
  Classification c;
  const bool complete = std::all_of(records.begin(), records.end(),
                                    [](const SweepRecord& r) { return r.bound_value.has_value(); });
  if (!complete) {
    c.note = "some rows lack a bound value; finite-sample diagnostic only";
    return c;
  }
  const bool any_nontrivial = std::any_of(records.begin(), records.end(),
                                          [](const SweepRecord& r) { return *r.nontrivial_info; });
  if (!any_nontrivial) {
    c.kind = Classification::Kind::never_nontrivial;
    c.note = "bound >= 1 on every observed row; finite-sample diagnostic only";
    return c;
  }
  for (auto it = records.rbegin(); it != records.rend() && *it->nontrivial_info; ++it) c.from_n = it->n;
  if (!c.from_n) {
    c.note = "last observed row gives no information; finite-sample diagnostic only";
    return c;
  }
  c.kind = Classification::Kind::nontrivial_from_n;
  const auto window = static_cast<std::size_t>(std::ceil(window_fraction * static_cast<double>(records.size())));
  if (window >= 2) {
    const auto tail = records.last(window);
    bool decreasing = true;
    for (std::size_t i = 1; i < tail.size(); ++i) {
      if (!(*tail[i].ratio_perfect < *tail[i - 1].ratio_perfect)) decreasing = false;
    }
    if (decreasing) c.kind = Classification::Kind::perfect_trend;
  }
  c.note = "consistent with the observed range only; not an asymptotic statement";
  return c;
}

std::string sweep_csv(std::span<const SweepRecord> records, int t_max) {
  std::ostringstream out;
  out << "n,min_count,ell0,ell,dim_u,dim_f,q,p_c,bound,width,nontrivial,ratio";
  for (int t = 0; t <= t_max; ++t) out << ",sigma_empty_t" << t;
  out << '\n';
  auto num = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string(); };
  auto integer = [](const auto& x) { return x ? std::to_string(*x) : std::string(); };
  auto flag = [](const std::optional<bool>& x) { return x ? std::string(*x ? "1" : "0") : std::string(); };
  for (const auto& r : records) {
    out << r.n << ',' << integer(r.min_count) << ',' << integer(r.ell0) << ',' << integer(r.ell) << ','
        << integer(r.dim_unrestricted) << ',' << integer(r.dim_within_family) << ',' << num(r.q) << ','
        << num(r.p_c) << ',' << num(r.bound_value) << ',' << num(r.width) << ',' << flag(r.nontrivial_info) << ','
        << num(r.ratio_perfect);
    for (int t = 0; t <= t_max; ++t) {
      const auto idx = static_cast<std::size_t>(t);
      out << ',' << (idx < r.sigma_empty_at.size() ? flag(r.sigma_empty_at[idx]) : std::string());
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kkb

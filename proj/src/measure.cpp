#include "kkb/measure.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "kkb/error.hpp"

namespace kkb {

std::string_view to_string(MuMethod m) {
  switch (m) {
    case MuMethod::enumeration: return "enumeration";
    case MuMethod::inclusion_exclusion: return "inclusion_exclusion";
    case MuMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

MeasurePolynomial MeasurePolynomial::by_enumeration(const UpperSet& f) {
  const int n = f.ground_size();
  if (n > kEnumerationGroundCap) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "enumeration needs ground size <= " + std::to_string(kEnumerationGroundCap));
  }
  // Superset-closure transform: in_f[s] becomes 1 iff s contains a minimal.
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> in_f(total, 0);
  for (const auto& m : f.minimals()) in_f[m.bits()] = 1;
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t s = 0; s < total; ++s) {
      if ((s & b) == 0 && in_f[s]) in_f[s | b] = 1;
    }
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t s = 0; s < total; ++s) {
    if (in_f[s]) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  return MeasurePolynomial(MuMethod::enumeration, n, std::move(counts));
}

namespace {

void accumulate_unions(const std::vector<std::uint64_t>& sets, std::size_t next, std::uint64_t acc, int chosen,
                       std::vector<std::int64_t>& coeffs) {
  for (std::size_t i = next; i < sets.size(); ++i) {
    const std::uint64_t u = acc | sets[i];
    const int c = chosen + 1;
    coeffs[static_cast<std::size_t>(std::popcount(u))] += (c % 2 == 1) ? 1 : -1;
    accumulate_unions(sets, i + 1, u, c, coeffs);
  }
}

}  // namespace

MeasurePolynomial MeasurePolynomial::by_inclusion_exclusion(const UpperSet& f) {
  if (f.min_count() > kInclusionExclusionCap) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "inclusion-exclusion needs |F0| <= " + std::to_string(kInclusionExclusionCap));
  }
  std::vector<std::uint64_t> sets;
  sets.reserve(f.min_count());
  for (const auto& m : f.minimals()) sets.push_back(m.bits());
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(f.ground_size()) + 1, 0);
  accumulate_unions(sets, 0, 0, 0, coeffs);
  return MeasurePolynomial(MuMethod::inclusion_exclusion, f.ground_size(), std::move(coeffs));
}

double MeasurePolynomial::operator()(double p) const {
  const long double x = p;
  long double total = 0.0L;
  if (method_ == MuMethod::enumeration) {
    const long double y = 1.0L - x;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      total += static_cast<long double>(coeffs_[k]) * std::pow(x, static_cast<int>(k)) *
               std::pow(y, ground_size_ - static_cast<int>(k));
    }
  } else {
    for (std::size_t k = coeffs_.size(); k-- > 0;) total = total * x + static_cast<long double>(coeffs_[k]);
  }
  return static_cast<double>(total);
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
}

// Uniform double in [0,1) from the top 53 bits of one mt19937_64 draw.
// mt19937_64 output is fixed by the standard, so this is reproducible
// everywhere; std::bernoulli_distribution is not.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

MuEstimate monte_carlo(const UpperSet& f, double p, const McParams& mc) {
  std::mt19937_64 rng(mc.seed);
  const int n = f.ground_size();
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < mc.samples; ++i) {
    std::uint64_t bits = 0;
    for (int e = 0; e < n; ++e) {
      if (unit_uniform(rng) < p) bits |= std::uint64_t{1} << e;
    }
    if (f.contains(SubsetMask(n, bits))) ++hits;
  }
  const double n_samples = static_cast<double>(mc.samples);
  const double phat = static_cast<double>(hits) / n_samples;
  return {phat, std::sqrt(phat * (1.0 - phat) / n_samples), MuMethod::monte_carlo, mc.samples};
}

}  // namespace

MuEstimate mu(const UpperSet& f, double p, MuMethod method, std::optional<McParams> mc) {
  check_probability(p);
  switch (method) {
    case MuMethod::enumeration:
      return {MeasurePolynomial::by_enumeration(f)(p), 0.0, method, 0};
    case MuMethod::inclusion_exclusion:
      return {MeasurePolynomial::by_inclusion_exclusion(f)(p), 0.0, method, 0};
    case MuMethod::monte_carlo:
      if (!mc || mc->samples == 0) {
        throw Error(ErrorCode::MissingMcParams, "monte_carlo needs samples >= 1 and a seed");
      }
      return monte_carlo(f, p, *mc);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

MuMethod auto_exact_method(const UpperSet& f) {
  if (f.ground_size() <= kAutoEnumerationGroundCap) return MuMethod::enumeration;
  if (f.min_count() <= kAutoInclusionExclusionCap) return MuMethod::inclusion_exclusion;
  throw Error(ErrorCode::SizeLimitExceeded, "no exact method fits: ground size " +
                                                std::to_string(f.ground_size()) + ", |F0| " +
                                                std::to_string(f.min_count()));
}

CriticalProbability critical_probability(const UpperSet& f, double tol, MuMethod method) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (method == MuMethod::monte_carlo) {
    throw Error(ErrorCode::InvalidArgument, "critical probability requires an exact method");
  }
  const MeasurePolynomial poly = method == MuMethod::enumeration ? MeasurePolynomial::by_enumeration(f)
                                                                  : MeasurePolynomial::by_inclusion_exclusion(f);
  constexpr int kMaxIterations = 200;
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  double residual = std::abs(poly(mid) - 0.5);
  int it = 0;
  while (it < kMaxIterations && (hi - lo > tol || residual > tol)) {
    const double value = poly(mid);
    if (value < 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double next = lo + 0.5 * (hi - lo);
    ++it;
    if (next == mid) break;  // bracket is down to one ulp
    mid = next;
    residual = std::abs(poly(mid) - 0.5);
  }
  if (residual > 10.0 * tol) {
    throw Error(ErrorCode::NonConvergence, "residual " + std::to_string(residual) + " after bisection");
  }
  return {mid, residual, tol, it};
}

}  // namespace kkb

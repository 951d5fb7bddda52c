#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kkb/upper_set.hpp"

namespace kkb {

enum class MuMethod { enumeration, inclusion_exclusion, monte_carlo };

std::string_view to_string(MuMethod m);

inline constexpr int kEnumerationGroundCap = 24;
inline constexpr std::size_t kInclusionExclusionCap = 24;
/// Thresholds used when the caller asks for "whichever exact method fits".
inline constexpr int kAutoEnumerationGroundCap = 20;
inline constexpr std::size_t kAutoInclusionExclusionCap = 20;

struct McParams {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct MuEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 for exact methods
  MuMethod method = MuMethod::enumeration;
  std::uint64_t samples = 0;
};

struct CriticalProbability {
  double p_c = 0.0;
  double residual = 0.0;  // |mu_{p_c}(F) - 1/2|
  double tolerance = 0.0;
  int iterations = 0;
};

/// mu_p(F) as an explicit polynomial in p, built once and evaluated many
/// times (bisection for p_c calls it ~40 times).
///
/// Enumeration form:  sum_k c_k p^k (1-p)^(n-k), c_k = #{S in F : |S| = k}.
/// Inclusion-exclusion form:  sum_k a_k p^k, where a_k collects the signed
/// terms (-1)^(|I|+1) over index sets I whose union has size k. Both sets of
/// coefficients are exact integers, so the only rounding happens in the final
/// long double evaluation.
class MeasurePolynomial {
 public:
  static MeasurePolynomial by_enumeration(const UpperSet& f);
  static MeasurePolynomial by_inclusion_exclusion(const UpperSet& f);

  double operator()(double p) const;

  MuMethod method() const noexcept { return method_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

 private:
  MeasurePolynomial(MuMethod method, int ground_size, std::vector<std::int64_t> coeffs)
      : method_(method), ground_size_(ground_size), coeffs_(std::move(coeffs)) {}

  MuMethod method_;
  int ground_size_;
  std::vector<std::int64_t> coeffs_;
};

/// Errors: InvalidArgument (p outside [0,1]), SizeLimitExceeded (method cap),
/// MissingMcParams (monte_carlo without samples).
MuEstimate mu(const UpperSet& f, double p, MuMethod method, std::optional<McParams> mc = std::nullopt);

/// Enumeration when ground_size <= 20, else inclusion-exclusion when
/// |F0| <= 20, else SizeLimitExceeded.
MuMethod auto_exact_method(const UpperSet& f);

/// Bisection on [0,1]. Stops once the bracket is no wider than `tol` and the
/// residual is within `tol`. Only exact methods are accepted.
CriticalProbability critical_probability(const UpperSet& f, double tol = 1e-9,
                                         MuMethod method = MuMethod::enumeration);

}  // namespace kkb

#include "kkb/expectation_threshold.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>

#include "kkb/error.hpp"

namespace kkb {

namespace {

using Words = std::vector<std::uint64_t>;

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void set_bit(Words& w, std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }

bool any_bit(const Words& w) {
  return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

int and_count(const Words& a, const Words& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

std::size_t raw_candidate_count(const UpperSet& f) {
  std::size_t total = 0;
  for (const auto& m : f.minimals()) total += std::size_t{1} << m.size();
  return total;
}

void check_candidate_cap(const UpperSet& f, std::size_t cap) {
  if (raw_candidate_count(f) > cap) {
    throw Error(ErrorCode::SizeLimitExceeded, "candidate cover elements exceed cap " + std::to_string(cap));
  }
}

struct Candidate {
  SubsetMask mask;
  Words covered;  // minimals that contain mask
  double weight = 0.0;
};

/// Set cover over the minimal elements, using only candidates that equal the
/// intersection of the minimals they cover. Any other candidate is dominated
/// by that intersection (same coverage, strictly smaller p^|S| for p < 1).
class CoverSearch {
 public:
  CoverSearch(const UpperSet& f, double p, const CoverSearchLimits& limits)
      : f_(f), p_(p), limits_(limits), m_(f.min_count()), words_(word_count(m_)) {
    build_candidates();
  }

  /// Decision mode: first cover with cost <= threshold, if any.
  std::optional<Cover> find_within(double threshold) {
    threshold_ = threshold;
    decision_ = true;
    run();
    return best_;
  }

  /// Optimisation mode.
  std::pair<Cover, double> minimise() {
    decision_ = false;
    seed_with_greedy();
    run();
    return {*best_, best_cost_};
  }

 private:
  void build_candidates() {
    check_candidate_cap(f_, limits_.candidate_cap);
    std::unordered_map<std::uint64_t, std::size_t> index;
    std::vector<std::uint64_t> masks;
    std::vector<Words> covered;
    const auto& mins = f_.minimals();
    for (std::size_t i = 0; i < m_; ++i) {
      const std::uint64_t mb = mins[i].bits();
      for (std::uint64_t s = mb; s != 0; s = (s - 1) & mb) {
        auto [it, inserted] = index.try_emplace(s, masks.size());
        if (inserted) {
          masks.push_back(s);
          covered.emplace_back(words_, 0);
        }
        set_bit(covered[it->second], i);
      }
    }
    for (std::size_t c = 0; c < masks.size(); ++c) {
      std::uint64_t closure = ~std::uint64_t{0};
      for (std::size_t i = 0; i < m_; ++i) {
        if ((covered[c][i / 64] >> (i % 64)) & 1u) closure &= mins[i].bits();
      }
      if (closure != masks[c]) continue;
      const SubsetMask mask(f_.ground_size(), masks[c]);
      candidates_.push_back({mask, std::move(covered[c]), std::pow(p_, mask.size())});
    }
    std::sort(candidates_.begin(), candidates_.end(),
              [](const Candidate& a, const Candidate& b) { return canonical_less(a.mask, b.mask); });
    by_minimal_.assign(m_, {});
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      for (std::size_t i = 0; i < m_; ++i) {
        if ((candidates_[c].covered[i / 64] >> (i % 64)) & 1u) by_minimal_[i].push_back(c);
      }
    }
    banned_.assign(candidates_.size(), 0);
    seen_.assign(candidates_.size(), 0);
    gain_.assign(candidates_.size(), 0);
    sum_.assign(candidates_.size(), 0.0);
    rc_.assign(candidates_.size(), 0.0);
    grad_.assign(m_, 0.0);
    minimal_bit_.assign(m_, Words(words_, 0));
    for (std::size_t i = 0; i < m_; ++i) set_bit(minimal_bit_[i], i);
  }

  void seed_with_greedy() {
    Words uncovered = all_minimals();
    std::vector<std::size_t> chosen;
    double cost = 0.0;
    while (any_bit(uncovered)) {
      std::size_t pick = 0;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        const int gain = and_count(candidates_[c].covered, uncovered);
        if (gain == 0) continue;
        const double ratio = candidates_[c].weight / gain;
        if (ratio < best_ratio) {
          best_ratio = ratio;
          pick = c;
        }
      }
      chosen.push_back(pick);
      cost += candidates_[pick].weight;
      for (std::size_t w = 0; w < words_; ++w) uncovered[w] &= ~candidates_[pick].covered[w];
    }
    best_ = make_cover(chosen);
    best_cost_ = cost;
  }

  Words all_minimals() const {
    Words w(words_, 0);
    for (std::size_t i = 0; i < m_; ++i) set_bit(w, i);
    return w;
  }

  Cover make_cover(const std::vector<std::size_t>& chosen) const {
    std::vector<SubsetMask> elems;
    elems.reserve(chosen.size());
    for (std::size_t c : chosen) elems.push_back(candidates_[c].mask);
    return Cover(std::move(elems));
  }

  void run() {
    Words uncovered = all_minimals();
    std::vector<std::size_t> chosen;
    std::vector<double> u(m_, 0.0);
    done_ = false;
    nodes_ = 0;
    search(uncovered, 0.0, chosen, u, false);
  }

  // Lagrangian lower bound for covering the minimals in U. For multipliers
  // u_e >= 0 on the uncovered minimals,
  //   cost(cover) >= sum_e u_e + sum_S min(0, rc(S)),  rc(S) = w(S) - sum_{e in cov(S) ∩ U} u_e,
  // for every cover of U using allowed candidates. The multipliers start from
  // a dual-feasible point (uniform shares raised by one ascent pass) or from
  // the parent's, and are improved by projected subgradient steps.
  // Leaves the best multipliers in `u` and their reduced costs in `rc_`.
  // Returns +inf when some uncovered minimal has no allowed candidate.
  double lower_bound(std::vector<double>& u, bool warm, int iterations) {
    const std::size_t k = uncovered_list_.size();
    touched_.clear();
    ++stamp_;
    for (std::size_t e : uncovered_list_) {
      bool any = false;
      for (std::size_t c : by_minimal_[e]) {
        if (banned_[c]) continue;
        any = true;
        if (seen_[c] != stamp_) {
          seen_[c] = stamp_;
          touched_.push_back(c);
          gain_[c] = 0;
        }
        ++gain_[c];
      }
      if (!any) return std::numeric_limits<double>::infinity();
    }

    if (!warm) {
      for (std::size_t i = 0; i < k; ++i) {
        double share = std::numeric_limits<double>::infinity();
        for (std::size_t c : by_minimal_[uncovered_list_[i]]) {
          if (!banned_[c]) share = std::min(share, candidates_[c].weight / gain_[c]);
        }
        u[uncovered_list_[i]] = share;
      }
      load_sums(u);
      for (std::size_t e : uncovered_list_) {
        double extra = std::numeric_limits<double>::infinity();
        for (std::size_t c : by_minimal_[e]) {
          if (!banned_[c]) extra = std::min(extra, candidates_[c].weight - sum_[c]);
        }
        if (extra > 0.0) {
          u[e] += extra;
          for (std::size_t c : by_minimal_[e]) {
            if (!banned_[c]) sum_[c] += extra;
          }
        }
      }
    }

    best_u_.assign(u.begin(), u.end());
    double best = -std::numeric_limits<double>::infinity();
    double step_scale = 1.0;
    int stale = 0;
    const double target = budget();
    for (int it = 0; it <= iterations; ++it) {
      load_sums(u);
      double value = 0.0;
      for (std::size_t e : uncovered_list_) value += u[e];
      for (std::size_t c : touched_) value += std::min(0.0, candidates_[c].weight - sum_[c]);
      if (value > best + 1e-15) {
        best = value;
        for (std::size_t e : uncovered_list_) best_u_[e] = u[e];
        stale = 0;
      } else if (++stale >= 3) {
        step_scale *= 0.5;
        stale = 0;
      }
      if (best > target || it == iterations) break;
      // Subgradient: 1 - (number of negative-reduced-cost candidates covering e).
      double norm = 0.0;
      for (std::size_t e : uncovered_list_) {
        int negative = 0;
        for (std::size_t c : by_minimal_[e]) {
          if (!banned_[c] && candidates_[c].weight - sum_[c] < 0.0) ++negative;
        }
        grad_[e] = 1.0 - negative;
        norm += grad_[e] * grad_[e];
      }
      if (norm == 0.0) break;
      const double step = step_scale * std::max(target - value, 1e-6) / norm;
      for (std::size_t e : uncovered_list_) u[e] = std::max(0.0, u[e] + step * grad_[e]);
    }
    for (std::size_t e : uncovered_list_) u[e] = best_u_[e];
    load_sums(u);
    for (std::size_t c : touched_) rc_[c] = candidates_[c].weight - sum_[c];
    return best;
  }

  void load_sums(const std::vector<double>& u) {
    for (std::size_t c : touched_) sum_[c] = 0.0;
    for (std::size_t e : uncovered_list_) {
      for (std::size_t c : by_minimal_[e]) {
        if (!banned_[c]) sum_[c] += u[e];
      }
    }
  }

  static constexpr int kRootIterations = 300;
  static constexpr int kNodeIterations = 15;

  double budget() const {
    constexpr double kSlack = 1e-12;
    return (decision_ ? threshold_ : best_cost_) + kSlack;
  }

  void search(const Words& uncovered, double cost, std::vector<std::size_t>& chosen, std::vector<double>& u,
              bool warm) {
    if (done_) return;
    if (++nodes_ > limits_.node_limit) {
      throw Error(ErrorCode::SizeLimitExceeded, "cover search exceeded " + std::to_string(limits_.node_limit) +
                                                    " nodes");
    }
    if (!any_bit(uncovered)) {
      record_leaf(chosen);
      return;
    }
    uncovered_list_.clear();
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = uncovered[w]; bits != 0; bits &= bits - 1) {
        uncovered_list_.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
    const double bound = cost + lower_bound(u, warm, warm ? kNodeIterations : kRootIterations);
    if (!std::isfinite(bound) || bound > budget()) return;

    // Any cover through S costs at least bound + rc(S) when rc(S) > 0, so
    // candidates whose reduced cost overshoots the budget are dropped here.
    std::vector<std::size_t> banned_here;
    std::vector<std::pair<double, std::size_t>> reduced;
    for (std::size_t c : touched_) {
      if (bound + std::max(0.0, rc_[c]) > budget()) {
        banned_[c] = 1;
        banned_here.push_back(c);
      }
    }
    for (std::size_t c : touched_) reduced.emplace_back(rc_[c], c);
    std::sort(reduced.begin(), reduced.end());

    // Branch on the uncovered minimal with the fewest allowed candidates.
    std::size_t pivot = m_;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e : uncovered_list_) {
      std::size_t allowed = 0;
      for (std::size_t c : by_minimal_[e]) allowed += banned_[c] ? 0 : 1;
      if (allowed < fewest) {
        fewest = allowed;
        pivot = e;
      }
    }

    std::vector<std::size_t> options;
    if (fewest > 0) {
      const Words& pivot_row = minimal_bit_[pivot];
      for (const auto& [r, c] : reduced) {
        if (!banned_[c] && and_count(candidates_[c].covered, pivot_row) > 0) options.push_back(c);
      }
    }

    Words next(words_);
    std::vector<double> child_u;
    for (std::size_t c : options) {
      for (std::size_t w = 0; w < words_; ++w) next[w] = uncovered[w] & ~candidates_[c].covered[w];
      chosen.push_back(c);
      child_u = u;
      search(next, cost + candidates_[c].weight, chosen, child_u, true);
      chosen.pop_back();
      if (done_) break;
      // Covers using c were all explored above; later siblings skip it.
      banned_[c] = 1;
      banned_here.push_back(c);
    }
    for (std::size_t c : banned_here) banned_[c] = 0;
  }

  void record_leaf(const std::vector<std::size_t>& chosen) {
    // Recompute in canonical order so equal covers get bitwise-equal costs.
    Cover cover = make_cover(chosen);
    const double exact_cost = cover.cost(p_);
    if (decision_) {
      if (exact_cost <= threshold_) {
        best_ = std::move(cover);
        best_cost_ = exact_cost;
        done_ = true;
      }
      return;
    }
    constexpr double kTie = 1e-13;
    if (exact_cost < best_cost_ - kTie ||
        (std::abs(exact_cost - best_cost_) <= kTie && cover_less(cover, *best_))) {
      best_ = std::move(cover);
      best_cost_ = exact_cost;
    }
  }

  const UpperSet& f_;
  double p_;
  CoverSearchLimits limits_;
  std::size_t m_;
  std::size_t words_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<std::size_t>> by_minimal_;
  std::vector<char> banned_;
  std::vector<Words> minimal_bit_;

  // Scratch for lower_bound, indexed by candidate or by minimal.
  std::vector<std::size_t> uncovered_list_;
  std::vector<std::size_t> touched_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  std::vector<int> gain_;
  std::vector<double> sum_;
  std::vector<double> rc_;
  std::vector<double> grad_;
  std::vector<double> best_u_;

  bool decision_ = false;
  double threshold_ = 0.5;
  bool done_ = false;
  std::uint64_t nodes_ = 0;
  std::optional<Cover> best_;
  double best_cost_ = std::numeric_limits<double>::infinity();
};

}  // namespace

std::vector<SubsetMask> candidate_cover_elements(const UpperSet& f, std::size_t cap) {
  check_candidate_cap(f, cap);
  std::vector<SubsetMask> out;
  for (const auto& m : f.minimals()) {
    const std::uint64_t mb = m.bits();
    for (std::uint64_t s = mb; s != 0; s = (s - 1) & mb) out.emplace_back(f.ground_size(), s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoverSolution min_cover_cost(const UpperSet& f, double p, const CoverSearchLimits& limits) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::InvalidArgument, "min_cover_cost needs 0 < p < 1");
  CoverSearch search(f, p, limits);
  auto [cover, cost] = search.minimise();
  return {std::move(cover), cost, p};
}

bool is_p_small(const UpperSet& f, double p, const CoverSearchLimits& limits) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
  if (p == 0.0) return true;
  if (p == 1.0) return false;  // every nonempty cover costs at least 1
  CoverSearch search(f, p, limits);
  return search.find_within(0.5).has_value();
}

ExpectationThreshold expectation_threshold(const UpperSet& f, double tol, const CoverSearchLimits& limits) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  check_candidate_cap(f, limits.candidate_cap);
  constexpr int kMaxIterations = 64;
  double lo = 0.0;
  double hi = 1.0;
  Cover witness(f.minimals());
  int it = 0;
  while (hi - lo > tol && it < kMaxIterations) {
    const double mid = lo + 0.5 * (hi - lo);
    CoverSearch search(f, mid, limits);
    if (auto cover = search.find_within(0.5)) {
      lo = mid;
      witness = std::move(*cover);
    } else {
      hi = mid;
    }
    ++it;
  }
  return {lo + 0.5 * (hi - lo), std::move(witness), tol, it};
}

}  // namespace kkb

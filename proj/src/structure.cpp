#include "kkb/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kkb/error.hpp"

namespace kkb {

std::string_view to_string(DimConvention c) {
  return c == DimConvention::unrestricted ? "unrestricted" : "within_family";
}

SigmaResult sigma_k(std::span<const SubsetMask> sets, int k) {
  if (sets.empty()) throw Error(ErrorCode::EmptyInput, "sigma_k of no sets");
  if (k < 1 || static_cast<std::size_t>(k) > sets.size()) {
    throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " outside [1, " +
                                            std::to_string(sets.size()) + "]");
  }
  const int width = sets.front().width();
  std::uint64_t value = 0;
  for (int x = 0; x < width; ++x) {
    int count = 0;
    for (const auto& s : sets) {
      if (s.width() != width) throw Error(ErrorCode::WidthMismatch, "sigma_k inputs of mixed width");
      count += s.test(x) ? 1 : 0;
    }
    if (count >= k) value |= std::uint64_t{1} << x;
  }
  return {k, SubsetMask(width, value)};
}

int max_nonempty_sigma_index(const UpperSet& f) {
  const auto& mins = f.minimals();
  // sigma_i nonempty implies sigma_j nonempty for j <= i.
  int lo = 1;  // known nonempty
  int hi = static_cast<int>(mins.size());
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (!sigma_k(mins, mid).value.empty()) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

DimensionResult covering_dimension(const UpperSet& f, DimConvention convention) {
  const std::size_t m = f.min_count();
  if (m > kDimMinimalCap) {
    throw Error(ErrorCode::SizeLimitExceeded, "covering dimension needs |F0| <= " +
                                                  std::to_string(kDimMinimalCap) + ", got " + std::to_string(m));
  }
  const auto& mins = f.minimals();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;

  // intersection[B] for every nonempty block B of minimal indices.
  std::vector<std::uint64_t> intersection(std::size_t{full} + 1, 0);
  std::vector<std::uint8_t> admissible(std::size_t{full} + 1, 0);
  for (std::uint32_t b = 1; b <= full; ++b) {
    const int low = std::countr_zero(b);
    const std::uint32_t rest = b & (b - 1);
    intersection[b] = rest == 0 ? mins[static_cast<std::size_t>(low)].bits()
                                : intersection[rest] & mins[static_cast<std::size_t>(low)].bits();
    if (intersection[b] == 0) continue;
    admissible[b] = convention == DimConvention::unrestricted ||
                    f.contains(SubsetMask(f.ground_size(), intersection[b]));
  }

  // blocks[U] = fewest admissible blocks partitioning U; choice[U] = block
  // holding U's lowest minimal. Submasks are visited in decreasing numeric
  // order, so larger blocks win ties.
  constexpr std::uint8_t kUnset = 0xff;
  std::vector<std::uint8_t> blocks(std::size_t{full} + 1, kUnset);
  std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
  blocks[0] = 0;
  for (std::uint32_t u = 1; u <= full; ++u) {
    const std::uint32_t low = u & (~u + 1);
    const std::uint32_t others = u & ~low;
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      const std::uint32_t block = sub | low;
      if (admissible[block] && blocks[u & ~block] != kUnset) {
        const int count = blocks[u & ~block] + 1;
        if (blocks[u] == kUnset || count < blocks[u]) {
          blocks[u] = static_cast<std::uint8_t>(count);
          choice[u] = block;
        }
      }
      if (sub == 0) break;
    }
  }

  // Singletons are always admissible (each minimal is nonempty and in F).
  std::vector<SubsetMask> witness;
  for (std::uint32_t u = full; u != 0; u &= ~choice[u]) {
    witness.emplace_back(f.ground_size(), intersection[choice[u]]);
  }
  return {blocks[full], Cover(std::move(witness)), convention};
}

int dim_upper_bound_via_sigma(const UpperSet& f) {
  return static_cast<int>(f.min_count()) + 1 - max_nonempty_sigma_index(f);
}

}  // namespace kkb

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kkb {

/// A subset of the ground set {0, ..., width-1} stored as a 64-bit word.
/// Element i is present iff bit i is set. Equality is bitwise and includes
/// the width.
class SubsetMask {
 public:
  static constexpr int kMaxWidth = 64;

  SubsetMask() = default;

  /// Throws WidthMismatch if bits outside [0, width) are set.
  SubsetMask(int width, std::uint64_t bits);

  static SubsetMask empty_of(int width) { return SubsetMask(width, 0); }
  static SubsetMask full_of(int width);
  static SubsetMask of(int width, std::span<const int> elements);
  static SubsetMask of(int width, std::initializer_list<int> elements) {
    return of(width, std::span<const int>(elements.begin(), elements.size()));
  }

  int width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool test(int i) const noexcept { return i >= 0 && i < width_ && ((bits_ >> i) & 1u); }

  /// Both masks must share a width; throws WidthMismatch otherwise.
  bool is_subset_of(const SubsetMask& other) const;

  std::vector<int> elements() const;
  std::string to_string() const;

  SubsetMask operator&(const SubsetMask& other) const;
  SubsetMask operator|(const SubsetMask& other) const;

  bool operator==(const SubsetMask&) const = default;

 private:
  int width_ = 0;
  std::uint64_t bits_ = 0;
};

/// Canonical order: popcount first, then numeric value of the bits.
inline bool canonical_less(const SubsetMask& a, const SubsetMask& b) noexcept {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  return a.bits() < b.bits();
}

struct CanonicalLess {
  bool operator()(const SubsetMask& a, const SubsetMask& b) const noexcept {
    return canonical_less(a, b);
  }
};

}  // namespace kkb

template <>
struct std::hash<kkb::SubsetMask> {
  std::size_t operator()(const kkb::SubsetMask& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.bits() ^ (static_cast<std::uint64_t>(m.width()) << 58));
  }
};

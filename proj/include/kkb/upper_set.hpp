#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kkb/subset_mask.hpp"

namespace kkb {

/// Largest ground set accepted for exact computations.
inline constexpr int kExactGroundCap = 30;

enum class GroundCap {
  exact,    // ground_size <= kExactGroundCap
  relaxed,  // ground_size <= SubsetMask::kMaxWidth, for sampling-only use
};

struct Ell {
  int ell0 = 0;  // largest minimal element
  int ell = 0;   // max(ell0, 2)
};

/// A nontrivial monotone property (F != {} and F != 2^X) over {0, ..., n-1},
/// held as its minimal antichain in canonical order. Immutable once built.
class UpperSet {
 public:
  /// Builds the up-closure of `generators` and keeps its minimal elements.
  /// Errors: EmptyGenerators, TrivialUpperSet (empty generator), WidthMismatch,
  /// SizeLimitExceeded (ground size above the cap).
  static UpperSet from_generators(int ground_size, std::span<const SubsetMask> generators,
                                  GroundCap cap = GroundCap::exact);

  /// Like from_generators but rejects input that is not already an antichain
  /// (NotAntichain). Order of the input does not matter.
  static UpperSet from_antichain(int ground_size, std::span<const SubsetMask> minimals,
                                 GroundCap cap = GroundCap::exact);

  int ground_size() const noexcept { return ground_size_; }
  const std::vector<SubsetMask>& minimals() const noexcept { return minimals_; }
  std::size_t min_count() const noexcept { return minimals_.size(); }

  /// s is in F iff it contains some minimal element. Throws WidthMismatch.
  bool contains(const SubsetMask& s) const;

  Ell ell() const noexcept;

  /// Intersection of all minimal elements.
  SubsetMask common_intersection() const noexcept;

  bool operator==(const UpperSet&) const = default;

 private:
  UpperSet(int ground_size, std::vector<SubsetMask> minimals)
      : ground_size_(ground_size), minimals_(std::move(minimals)) {}

  int ground_size_ = 0;
  std::vector<SubsetMask> minimals_;
};

inline UpperSet normalize_to_antichain(int ground_size, std::span<const SubsetMask> generators) {
  return UpperSet::from_generators(ground_size, generators);
}

inline Ell ell(const UpperSet& f) noexcept { return f.ell(); }

/// A finite family of nonempty masks. Stored deduplicated in canonical order.
class Cover {
 public:
  Cover() = default;
  /// Throws TrivialUpperSet if any element is empty (its up-closure is all of 2^X).
  explicit Cover(std::vector<SubsetMask> elements);

  const std::vector<SubsetMask>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Every minimal element of f contains some element of the cover.
  bool covers(const UpperSet& f) const;

  /// Sum of p^|S| over the elements.
  double cost(double p) const;

  bool operator==(const Cover&) const = default;

 private:
  std::vector<SubsetMask> elements_;
};

/// Lexicographic comparison of two canonical covers.
bool cover_less(const Cover& a, const Cover& b);

}  // namespace kkb

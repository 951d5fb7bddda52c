#include "kkb/upper_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kkb/error.hpp"

namespace kkb {

namespace {

void validate(int ground_size, std::span<const SubsetMask> generators, GroundCap cap) {
  const int limit = cap == GroundCap::exact ? kExactGroundCap : SubsetMask::kMaxWidth;
  if (ground_size < 1) {
    throw Error(ErrorCode::InvalidArgument, "ground size must be positive");
  }
  if (ground_size > limit) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "ground size " + std::to_string(ground_size) + " exceeds cap " + std::to_string(limit));
  }
  if (generators.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  for (const auto& g : generators) {
    if (g.width() != ground_size) {
      throw Error(ErrorCode::WidthMismatch, "generator width " + std::to_string(g.width()) +
                                                " does not match ground size " + std::to_string(ground_size));
    }
    if (g.empty()) throw Error(ErrorCode::TrivialUpperSet, "empty generator makes F = 2^X");
  }
}

std::vector<SubsetMask> sorted_unique(std::span<const SubsetMask> masks) {
  std::vector<SubsetMask> v(masks.begin(), masks.end());
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Input is canonically sorted, so a mask can only contain masks before it.
std::vector<SubsetMask> minimal_only(const std::vector<SubsetMask>& sorted) {
  std::vector<SubsetMask> kept;
  for (const auto& m : sorted) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const SubsetMask& k) {
      return (k.bits() & ~m.bits()) == 0;
    });
    if (!absorbed) kept.push_back(m);
  }
  return kept;
}

}  // namespace

UpperSet UpperSet::from_generators(int ground_size, std::span<const SubsetMask> generators, GroundCap cap) {
  validate(ground_size, generators, cap);
  return UpperSet(ground_size, minimal_only(sorted_unique(generators)));
}

UpperSet UpperSet::from_antichain(int ground_size, std::span<const SubsetMask> minimals, GroundCap cap) {
  validate(ground_size, minimals, cap);
  auto sorted = sorted_unique(minimals);
  if (sorted.size() != minimals.size()) {
    throw Error(ErrorCode::NotAntichain, "duplicate minimal elements");
  }
  auto reduced = minimal_only(sorted);
  if (reduced.size() != sorted.size()) {
    throw Error(ErrorCode::NotAntichain, "a listed minimal element contains another");
  }
  return UpperSet(ground_size, std::move(reduced));
}

bool UpperSet::contains(const SubsetMask& s) const {
  if (s.width() != ground_size_) throw Error(ErrorCode::WidthMismatch, "membership test across widths");
  const std::uint64_t b = s.bits();
  return std::any_of(minimals_.begin(), minimals_.end(),
                     [b](const SubsetMask& m) { return (m.bits() & ~b) == 0; });
}

Ell UpperSet::ell() const noexcept {
  // Canonical order puts the largest popcount last.
  const int ell0 = minimals_.back().size();
  return {ell0, std::max(ell0, 2)};
}

SubsetMask UpperSet::common_intersection() const noexcept {
  std::uint64_t bits = minimals_.front().bits();
  for (const auto& m : minimals_) bits &= m.bits();
  return SubsetMask(ground_size_, bits);
}

Cover::Cover(std::vector<SubsetMask> elements) : elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    if (e.empty()) throw Error(ErrorCode::TrivialUpperSet, "cover element is the empty set");
  }
  std::sort(elements_.begin(), elements_.end(), canonical_less);
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Cover::covers(const UpperSet& f) const {
  for (const auto& m : f.minimals()) {
    const bool hit = std::any_of(elements_.begin(), elements_.end(),
                                 [&](const SubsetMask& s) { return s.is_subset_of(m); });
    if (!hit) return false;
  }
  return true;
}

double Cover::cost(double p) const {
  double total = 0.0;
  for (const auto& e : elements_) total += std::pow(p, e.size());
  return total;
}

bool cover_less(const Cover& a, const Cover& b) {
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                      b.elements().end(), canonical_less);
}

}  // namespace kkb

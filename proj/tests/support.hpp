#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "kkb/error.hpp"
#include "kkb/families.hpp"

// Checks that `expr` throws kkb::Error carrying `expected_code`.
#define CHECK_ERROR_CODE(expr, expected_code)                      \
  do {                                                             \
    bool thrown_ = false;                                          \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const kkb::Error& e_) {                               \
      thrown_ = true;                                              \
      CHECK(e_.code() == (expected_code));                         \
    }                                                              \
    CHECK_MESSAGE(thrown_, "expected kkb::Error from " #expr);     \
  } while (false)

namespace testing_support {

/// Seeded random antichains for property tests.
inline std::vector<kkb::UpperSet> random_instances(std::uint64_t seed, int count, int max_ground,
                                                   int max_draws, int max_size) {
  std::mt19937_64 rng(seed);
  std::vector<kkb::UpperSet> out;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_ground - 1));
    const int draws = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_draws));
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(max_size, n - 1)));
    out.push_back(kkb::random_upper_set(n, draws, size, rng()));
  }
  return out;
}

}  // namespace testing_support

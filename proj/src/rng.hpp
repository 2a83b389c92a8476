#pragma once

#include <cstdint>
#include <random>

namespace treelect::detail {

// Rejection sampling keeps results identical across standard libraries.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace treelect::detail

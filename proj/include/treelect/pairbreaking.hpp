#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace treelect {

// Colours 1..colours on the pairs (a, b), 1 <= a < b <= z.
class PairColouring {
 public:
  PairColouring(int z, int colours);

  int z() const { return z_; }
  int colours() const { return colours_; }
  int at(int a, int b) const { return colour_[index(a, b)]; }
  void set(int a, int b, int colour);
  // Every pair has a colour in range.
  bool total() const;

  static std::size_t pair_count(int z) { return static_cast<std::size_t>(z) * (z - 1) / 2; }

 private:
  std::size_t index(int a, int b) const;
  int z_;
  int colours_;
  std::vector<int> colour_;  // 0 = unset
};

// bits[(a - 1) * colours + (colour - 1)] in {0, 1}.
struct Breaker {
  int z = 0;
  int colours = 0;
  std::vector<std::uint8_t> bits;
  int at(int a, int colour) const { return bits[static_cast<std::size_t>(a - 1) * colours + (colour - 1)]; }
};

bool is_breaker(const PairColouring& col, const Breaker& b);

// Per colour class, a 2-colouring of its graph (isolated vertices get 0);
// nullopt when some class has an odd cycle.
std::optional<Breaker> exists_breaker(const PairColouring& col);
// Tries all 2^(z*colours) functions. Throws TooLarge when z*colours > 24.
std::optional<Breaker> exhaustive_breaker(const PairColouring& col);

// Smallest colour count admitting a breaker. Exhaustive search over
// colourings (colours in first-occurrence order) for z <= exhaustive_limit;
// beyond that, the bipartite cover number ceil(log2 z), which is exact:
// bipartite classes give every vertex a distinct bit vector, and binary
// digits give a colouring. Throws TooLarge when exhaustive_limit > 8.
int min_colours(int z, int exhaustive_limit = 8);
// Exhaustive search only. Throws TooLarge for z > 8.
int min_colours_exhaustive(int z);

// 1.5 k! + sum_{i=0}^{k-3} k!/(k-i)!
double lemma_threshold(int k);
// Distinct colours among the pairs inside subset.
int colours_within(const PairColouring& col, const std::vector<int>& subset);
// Whether colours_within(col, subset) >= k. Throws NoBreaker when col admits none.
bool check_lemma_threshold(int k, const PairColouring& col, const std::vector<int>& subset);

// A random colouring that admits a breaker: vertices get distinct
// colours-bit labels and every pair takes a coordinate where its labels differ.
// Requires z <= 2^colours.
PairColouring random_breakable_colouring(int z, int colours, std::uint64_t seed);
// Uniformly random colouring.
PairColouring random_colouring(int z, int colours, std::uint64_t seed);

// ceil(sqrt(log2(z) / 3))
int colour_lower_bound(int z);

}  // namespace treelect

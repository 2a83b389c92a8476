#include "treelect/pairbreaking.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rng.hpp"
#include "treelect/bits.hpp"
#include "treelect/error.hpp"

namespace treelect {

PairColouring::PairColouring(int z, int colours) : z_(z), colours_(colours), colour_(pair_count(z), 0) {
  if (z < 2 || colours < 1) throw Error(Errc::BadParameters, "need z >= 2 and at least one colour");
}

std::size_t PairColouring::index(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > z_ || a == b) {
    throw Error(Errc::BadParameters, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  }
  // Pairs ordered by their larger element, then the smaller.
  return static_cast<std::size_t>(b - 1) * (b - 2) / 2 + (a - 1);
}

void PairColouring::set(int a, int b, int colour) {
  if (colour < 1 || colour > colours_) throw Error(Errc::BadParameters, "colour out of range");
  colour_[index(a, b)] = colour;
}

bool PairColouring::total() const {
  return std::none_of(colour_.begin(), colour_.end(), [](int c) { return c == 0; });
}

bool is_breaker(const PairColouring& col, const Breaker& b) {
  if (b.z != col.z() || b.colours != col.colours()) return false;
  for (int y = 2; y <= col.z(); ++y) {
    for (int x = 1; x < y; ++x) {
      const int g = col.at(x, y);
      if (b.at(x, g) == b.at(y, g)) return false;
    }
  }
  return true;
}

namespace {

// 2-colours the graph of one colour class; false on an odd cycle.
bool two_colour(const PairColouring& col, int colour, std::vector<int>& side) {
  const int z = col.z();
  side.assign(z + 1, -1);
  for (int s = 1; s <= z; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 1; y <= z; ++y) {
        if (y == x || col.at(x, y) != colour) continue;
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

void require_total(const PairColouring& col) {
  if (!col.total()) throw Error(Errc::BadParameters, "colouring leaves some pair uncoloured");
}

}  // namespace

std::optional<Breaker> exists_breaker(const PairColouring& col) {
  require_total(col);
  Breaker b{col.z(), col.colours(), std::vector<std::uint8_t>(static_cast<std::size_t>(col.z()) * col.colours())};
  std::vector<int> side;
  for (int g = 1; g <= col.colours(); ++g) {
    if (!two_colour(col, g, side)) return std::nullopt;
    for (int a = 1; a <= col.z(); ++a) b.bits[static_cast<std::size_t>(a - 1) * col.colours() + (g - 1)] = side[a];
  }
  return b;
}

std::optional<Breaker> exhaustive_breaker(const PairColouring& col) {
  require_total(col);
  const int width = col.z() * col.colours();
  if (width > 24) throw Error(Errc::TooLarge, "exhaustive search over 2^" + std::to_string(width) + " functions");
  Breaker b{col.z(), col.colours(), std::vector<std::uint8_t>(width)};
  for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
    for (int i = 0; i < width; ++i) b.bits[i] = (mask >> i) & 1u;
    if (is_breaker(col, b)) return b;
  }
  return std::nullopt;
}

namespace {

// Backtracking over colourings of K_z with every class bipartite; pairs in
// order of their larger element, colours in first-occurrence order.
class CoverSearch {
 public:
  CoverSearch(int z, int colours) : col_(z, colours) {
    for (int b = 2; b <= z; ++b) {
      for (int a = 1; a < b; ++a) pairs_.emplace_back(a, b);
    }
  }
  bool run() { return step(0, 0); }

 private:
  bool step(std::size_t i, int used) {
    if (i == pairs_.size()) return true;
    auto [a, b] = pairs_[i];
    const int top = std::min(used + 1, col_.colours());
    for (int g = 1; g <= top; ++g) {
      col_.set(a, b, g);
      if (bipartite_with(g, i) && step(i + 1, std::max(used, g))) return true;
    }
    return false;
  }

  // Whether colour g restricted to the first i+1 pairs is bipartite.
  bool bipartite_with(int g, std::size_t i) {
    const int z = col_.z();
    std::vector<std::vector<int>> adj(z + 1);
    for (std::size_t e = 0; e <= i; ++e) {
      auto [x, y] = pairs_[e];
      if (col_.at(x, y) != g) continue;
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    std::vector<int> side(z + 1, -1);
    for (int s = 1; s <= z; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
          if (side[y] < 0) {
            side[y] = 1 - side[x];
            stack.push_back(y);
          } else if (side[y] == side[x]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  PairColouring col_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

int min_colours_exhaustive(int z) {
  if (z < 2) throw Error(Errc::BadParameters, "need z >= 2");
  if (z > 8) throw Error(Errc::TooLarge, "exhaustive colouring search is limited to z <= 8");
  for (int c = 1;; ++c) {
    if (CoverSearch(z, c).run()) return c;
  }
}

int min_colours(int z, int exhaustive_limit) {
  if (z < 2) throw Error(Errc::BadParameters, "need z >= 2");
  if (exhaustive_limit > 8) throw Error(Errc::TooLarge, "exhaustive colouring search is limited to z <= 8");
  if (z <= exhaustive_limit) return min_colours_exhaustive(z);
  return ceil_log2(static_cast<std::uint64_t>(z));
}

double lemma_threshold(int k) {
  if (k < 2) throw Error(Errc::BadParameters, "need k >= 2");
  double fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  double sum = 0;
  for (int i = 0; i <= k - 3; ++i) {
    // k! / (k - i)! = k (k-1) ... (k-i+1)
    double falling = 1;
    for (int j = 0; j < i; ++j) falling *= k - j;
    sum += falling;
  }
  return 1.5 * fact + sum;
}

int colours_within(const PairColouring& col, const std::vector<int>& subset) {
  std::set<int> seen;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (subset[i] != subset[j]) seen.insert(col.at(subset[i], subset[j]));
    }
  }
  return static_cast<int>(seen.size());
}

bool check_lemma_threshold(int k, const PairColouring& col, const std::vector<int>& subset) {
  if (!exists_breaker(col)) throw Error(Errc::NoBreaker, "the colouring admits no breaker");
  return colours_within(col, subset) >= k;
}

PairColouring random_breakable_colouring(int z, int colours, std::uint64_t seed) {
  if (colours > 20 || z > (1 << colours)) throw Error(Errc::BadParameters, "need z <= 2^colours and colours <= 20");
  std::mt19937_64 rng(seed);
  // Distinct labels via a partial Fisher-Yates shuffle of 0..2^colours-1.
  std::vector<int> pool(1 << colours);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
  for (int i = 0; i < z; ++i) std::swap(pool[i], pool[i + detail::below(rng, pool.size() - i)]);
  PairColouring col(z, colours);
  for (int b = 2; b <= z; ++b) {
    for (int a = 1; a < b; ++a) {
      const int diff = pool[a - 1] ^ pool[b - 1];
      std::vector<int> coords;
      for (int g = 0; g < colours; ++g) {
        if ((diff >> g) & 1) coords.push_back(g);
      }
      col.set(a, b, coords[detail::below(rng, coords.size())] + 1);
    }
  }
  return col;
}

PairColouring random_colouring(int z, int colours, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PairColouring col(z, colours);
  for (int b = 2; b <= z; ++b) {
    for (int a = 1; a < b; ++a) col.set(a, b, static_cast<int>(detail::below(rng, colours)) + 1);
  }
  return col;
}

int colour_lower_bound(int z) { return static_cast<int>(std::ceil(std::sqrt(std::log2(static_cast<double>(z)) / 3.0))); }

}  // namespace treelect

#include "treelect/generators.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <queue>
#include <random>

#include "rng.hpp"

namespace treelect {

namespace {

using detail::below;

PortTree with_random_ports(int n, const std::vector<std::pair<int, int>>& edges, std::mt19937_64& rng) {
  std::vector<std::vector<int>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(static_cast<int>(e));
    incident[edges[e].second].push_back(static_cast<int>(e));
  }
  // port_of[e][side]
  std::vector<std::array<int, 2>> port_of(edges.size());
  for (int v = 0; v < n; ++v) {
    auto& inc = incident[v];
    for (std::size_t i = inc.size(); i > 1; --i) std::swap(inc[i - 1], inc[below(rng, i)]);
    for (std::size_t p = 0; p < inc.size(); ++p) {
      const auto& e = edges[inc[p]];
      port_of[inc[p]][e.first == v ? 0 : 1] = static_cast<int>(p);
    }
  }
  RawAdjacency raw(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = edges[e];
    raw[a].push_back(PortEntry{port_of[e][0], b, port_of[e][1]});
    raw[b].push_back(PortEntry{port_of[e][1], a, port_of[e][0]});
  }
  return PortTree::from_raw(raw);
}

}  // namespace

PortTree path_from_seq(const PortSeq& seq) {
  if (seq.size() % 2 != 0) throw Error(Errc::BadParameters, "path sequence must have even length");
  TreeBuilder b;
  Node cur = b.add_node();
  for (std::size_t i = 0; i < seq.size(); i += 2) cur = b.grow(cur, seq[i], seq[i + 1]);
  return b.build();
}

PortTree gen_path(int k) {
  if (k < 1) throw Error(Errc::BadParameters, "path length must be >= 1");
  PortSeq seq{0, 0};
  for (int i = 1; i < k; ++i) {
    seq.push_back(1);
    seq.push_back(0);
  }
  return path_from_seq(seq);
}

PortTree gen_intro_line() { return path_from_seq({0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0}); }

PortTree gen_random(int n, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::BadParameters, "n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::vector<int> code(n - 2);
    for (int& c : code) c = static_cast<int>(below(rng, n));
    std::vector<int> count(n, 0);
    for (int c : code) ++count[c];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
      if (count[v] == 0) leaves.push(v);
    }
    for (int c : code) {
      int leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(leaf, c);
      if (--count[c] == 0) leaves.push(c);
    }
    int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
  }
  return with_random_ports(n, edges, rng);
}

PortTree gen_random_diameter(int n, int diam, std::uint64_t seed) {
  if (diam < 0 || n < diam + 1) throw Error(Errc::BadParameters, "need n >= diam + 1");
  if (diam <= 1 && n != diam + 1) throw Error(Errc::BadParameters, "diameter <= 1 fixes n");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> budget(diam + 1);
  for (int i = 0; i <= diam; ++i) {
    budget[i] = std::min(i, diam - i);
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  std::vector<int> open;
  for (int i = 0; i <= diam; ++i) {
    if (budget[i] >= 1) open.push_back(i);
  }
  for (int v = diam + 1; v < n; ++v) {
    int parent = open[below(rng, open.size())];
    edges.emplace_back(parent, v);
    budget.push_back(budget[parent] - 1);
    if (budget[v] >= 1) open.push_back(v);
  }
  return with_random_ports(n, edges, rng);
}

PortTree gen_spider(const std::vector<int>& legs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  int n = 1;
  for (int len : legs) {
    if (len < 1) throw Error(Errc::BadParameters, "spider legs must have length >= 1");
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
  }
  return with_random_ports(n, edges, rng);
}

namespace {

// Saturating binomial coefficient.
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

// Tuples of `parts` positive integers summing to s.
std::uint64_t tuples_with_sum(int s, int parts) {
  if (parts == 0) return s == 0 ? 1 : 0;
  if (s < parts) return 0;
  return binom(static_cast<std::uint64_t>(s - 1), static_cast<std::uint64_t>(parts - 1));
}

}  // namespace

std::vector<int> unrank_composition(std::uint64_t rank, int parts) {
  if (rank < 1 || parts < 1) throw Error(Errc::BadParameters, "rank and length must be >= 1");
  std::uint64_t idx = rank - 1;
  int s = parts;
  while (idx >= tuples_with_sum(s, parts)) idx -= tuples_with_sum(s++, parts);
  // Colex: the last coordinate is the most significant.
  std::vector<int> out(parts);
  for (int pos = parts - 1; pos > 0; --pos) {
    int v = 1;
    while (idx >= tuples_with_sum(s - v, pos)) idx -= tuples_with_sum(s - v++, pos);
    out[pos] = v;
    s -= v;
  }
  out[0] = s;
  return out;
}

std::uint64_t rank_composition(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  int s = 0;
  for (int v : parts) {
    if (v < 1) throw Error(Errc::BadParameters, "parts must be positive");
    s += v;
  }
  std::uint64_t rank = 1;
  for (int t = len; t < s; ++t) rank += tuples_with_sum(t, len);
  int rest = s;
  for (int pos = len - 1; pos > 0; --pos) {
    for (int v = 1; v < parts[pos]; ++v) rank += tuples_with_sum(rest - v, pos);
    rest -= parts[pos];
  }
  return rank;
}

int double_broom_size(int delta, int diam) { return 2 * delta * (delta + 1) + diam - 1; }

DoubleBroom gen_double_broom(int delta, std::uint64_t a, std::uint64_t b, int diam) {
  if (delta < 1 || diam < 7 || diam % 2 == 0) throw Error(Errc::BadParameters, "need delta >= 1 and odd diam >= 7");
  std::uint64_t limit = 1;
  for (int i = 0; i < delta; ++i) limit *= static_cast<std::uint64_t>(delta);
  if (!(1 <= a && a < b && b <= limit)) throw Error(Errc::BadParameters, "need 1 <= a < b <= delta^delta");

  auto leaves = [&](std::uint64_t rank) {
    std::vector<int> parts = unrank_composition(rank, delta);
    int sum = 0;
    for (int v : parts) sum += v;
    const int last = delta * delta - sum;
    if (last < 0) throw Error(Errc::BadParameters, "composition too large for the broom size");
    parts.push_back(last);
    return parts;
  };

  DoubleBroom out;
  out.a_leaves = leaves(a);
  out.b_leaves = leaves(b);
  TreeBuilder tb;
  const int handle = diam - 4;
  out.va = tb.add_node();
  Node cur = out.va;
  for (int e = 0; e < handle; ++e) {
    const int port = e % 2 == 0 ? 0 : 1;
    cur = tb.grow(cur, port, port);
  }
  out.vb = cur;
  auto broom = [&](Node end, const std::vector<int>& counts) {
    for (int i = 0; i <= delta; ++i) {
      Node w = tb.grow(end, i + 1, 0);
      for (int l = 0; l < counts[i]; ++l) tb.grow(w, l + 1, 0);
    }
  };
  broom(out.va, out.a_leaves);
  broom(out.vb, out.b_leaves);
  out.tree = tb.build();
  return out;
}

namespace {

// Arm of the given length from start; first edge uses first_port at start.
Node arm(TreeBuilder& tb, Node start, int first_port, int length) {
  Node cur = start;
  for (int e = 0; e < length; ++e) cur = tb.grow(cur, e == 0 ? first_port : 1, 0);
  return cur;
}

// Path of length 2 (kind 0) or a path of length 2 with an extra leaf at its middle (kind 1).
Node gadget(TreeBuilder& tb, Node at, int kind) {
  Node mid = tb.grow(at, 1, 0);
  Node leaf = tb.grow(mid, 1, 0);
  if (kind == 1) tb.grow(mid, 2, 0);
  return leaf;
}

GSigma build_gsigma(int k, int diam, const std::vector<int>& sigma, bool odd) {
  for (int s : sigma) {
    if (s < 2 || s > k) throw Error(Errc::BadParameters, "sigma must be a subset of 2..k");
  }
  auto swapped = [&](int i) { return std::find(sigma.begin(), sigma.end(), i) != sigma.end(); };
  const int h = odd ? diam / 2 : (diam - 2) / 2;
  GSigma g;
  g.k = k;
  for (int pass = 0; pass < 2; ++pass) {
    const bool gadgets = pass == 0;
    TreeBuilder tb;
    Node c0 = tb.add_node();
    Node c1 = tb.grow(c0, 0, 0);
    std::vector<Node> p(k + 1, -1);
    std::vector<Node> q(k + 1, -1);
    int first = 1;
    if (!odd) {
      p[1] = arm(tb, c0, 1, h);
      q[1] = arm(tb, c1, 1, h + 1);
      first = 2;
    }
    for (int i = first; i <= k; ++i) {
      p[i] = arm(tb, c0, i, h - 2);
      q[i] = arm(tb, c1, i, h - 2);
    }
    if (gadgets) {
      g.p_leaf.assign(k + 1, -1);
      g.q_leaf.assign(k + 1, -1);
      for (int i = first; i <= k; ++i) {
        const int on_p = swapped(i) ? 1 : 0;
        g.p_leaf[i] = gadget(tb, p[i], on_p);
        g.q_leaf[i] = gadget(tb, q[i], 1 - on_p);
      }
      g.tree = tb.build();
      g.c0 = c0;
      g.c1 = c1;
      g.p = p;
      g.q = q;
    } else {
      g.core = tb.build();
    }
  }
  return g;
}

}  // namespace

GSigma gen_gsigma_odd(int n, int diam, const std::vector<int>& sigma) {
  if (diam < 7 || diam % 2 == 0 || n < 1) throw Error(Errc::BadParameters, "need odd diam >= 7");
  return build_gsigma((n + diam - 1) / diam, diam, sigma, true);
}

GSigma gen_gsigma_even(int n, int diam, const std::vector<int>& sigma) {
  if (diam < 8 || diam % 2 == 1 || n < 1) throw Error(Errc::BadParameters, "need even diam >= 8");
  const int k = (n + diam - 2) / (diam - 1);
  if (k < 2) throw Error(Errc::BadParameters, "need at least two arms");
  return build_gsigma(k, diam, sigma, false);
}

}  // namespace treelect

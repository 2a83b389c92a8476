#pragma once

// Slow reference implementations used to check the library. None of these
// call into the code they check beyond PortTree accessors.

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "treelect/port_tree.hpp"

namespace brute {

using treelect::Link;
using treelect::Node;
using treelect::PortSeq;
using treelect::PortTree;
using treelect::RawAdjacency;

inline std::vector<std::vector<int>> all_distances(const PortTree& t) {
  const int n = t.node_count();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int p = 0; p < t.degree(v); ++p) d[v][t.link(v, p).node] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

inline int diameter(const PortTree& t) {
  int best = 0;
  for (const auto& row : brute::all_distances(t)) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

// Nodes of minimum eccentricity.
inline std::vector<Node> centre_nodes(const PortTree& t) {
  auto d = brute::all_distances(t);
  std::vector<int> ecc(t.node_count());
  for (int v = 0; v < t.node_count(); ++v) ecc[v] = *std::max_element(d[v].begin(), d[v].end());
  const int m = *std::min_element(ecc.begin(), ecc.end());
  std::vector<Node> out;
  for (int v = 0; v < t.node_count(); ++v) {
    if (ecc[v] == m) out.push_back(v);
  }
  return out;
}

// Full port sequence of the path a -> b, via BFS parents from b.
inline PortSeq port_path(const PortTree& t, Node a, Node b) {
  std::vector<int> parent(t.node_count(), -1);
  std::vector<int> via(t.node_count(), -1);
  std::queue<int> q;
  q.push(b);
  parent[b] = b;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int p = 0; p < t.degree(x); ++p) {
      int y = t.link(x, p).node;
      if (parent[y] >= 0) continue;
      parent[y] = x;
      via[y] = t.link(x, p).port;  // port at y towards x
      q.push(y);
    }
  }
  PortSeq seq;
  for (int x = a; x != b; x = parent[x]) {
    seq.push_back(via[x]);
    seq.push_back(t.link(x, via[x]).port);
  }
  return seq;
}

inline PortSeq outgoing(const PortSeq& seq) {
  PortSeq out;
  for (std::size_t i = 0; i < seq.size(); i += 2) out.push_back(seq[i]);
  return out;
}

// Port-preserving isomorphism of (a, ra) onto (b, rb); the map is forced.
inline bool rooted_isomorphic(const PortTree& a, Node ra, const PortTree& b, Node rb) {
  if (a.node_count() != b.node_count()) return false;
  std::vector<int> map(a.node_count(), -1);
  std::vector<int> used(b.node_count(), 0);
  std::vector<std::pair<int, int>> stack{{ra, rb}};
  map[ra] = rb;
  used[rb] = 1;
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (a.degree(x) != b.degree(y)) return false;
    for (int p = 0; p < a.degree(x); ++p) {
      Link lx = a.link(x, p);
      Link ly = b.link(y, p);
      if (lx.port != ly.port) return false;
      if (map[lx.node] >= 0) {
        if (map[lx.node] != ly.node) return false;
        continue;
      }
      if (used[ly.node]) return false;
      map[lx.node] = ly.node;
      used[ly.node] = 1;
      stack.emplace_back(lx.node, ly.node);
    }
  }
  return true;
}

inline bool isomorphic(const PortTree& a, const PortTree& b) {
  if (a.node_count() != b.node_count()) return false;
  for (Node y = 0; y < b.node_count(); ++y) {
    if (brute::rooted_isomorphic(a, 0, b, y)) return true;
  }
  return false;
}

inline bool has_nontrivial_automorphism(const PortTree& t) {
  for (Node x = 1; x < t.node_count(); ++x) {
    if (brute::rooted_isomorphic(t, 0, t, x)) return true;
  }
  return false;
}

// Radius-r views of u in a and v in b, compared by walking both balls in step.
inline bool views_equal(const PortTree& a, Node u, const PortTree& b, Node v, int r, int from_a = -1, int from_b = -1) {
  if (a.degree(u) != b.degree(v)) return false;
  if (r == 0) return true;
  for (int p = 0; p < a.degree(u); ++p) {
    Link la = a.link(u, p);
    Link lb = b.link(v, p);
    if (la.port != lb.port) return false;
    if ((la.node == from_a) != (lb.node == from_b)) return false;
    if (la.node == from_a) continue;
    if (!brute::views_equal(a, la.node, b, lb.node, r - 1, u, v)) return false;
  }
  return true;
}

// Least r at which some leader c gives every class of equal radius-r views
// one common output; nullopt if none up to the diameter.
inline std::optional<int> xi(const PortTree& t) {
  const int n = t.node_count();
  const int d = brute::diameter(t);
  std::vector<std::vector<PortSeq>> out(n, std::vector<PortSeq>(n));
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < n; ++c) out[v][c] = brute::outgoing(brute::port_path(t, v, c));
  }
  for (int r = 0; r <= d; ++r) {
    for (int c = 0; c < n; ++c) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) {
          if (out[u][c] != out[v][c] && brute::views_equal(t, u, t, v, r)) ok = false;
        }
      }
      if (ok) return r;
    }
  }
  return std::nullopt;
}

// Election is possible at radius r: some leader c gives every pair of nodes
// with equal radius-r views the same outgoing-port sequence towards c.
inline bool feasible_at(const PortTree& t, int r) {
  const int n = t.node_count();
  std::vector<std::pair<int, int>> same;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (brute::views_equal(t, u, t, v, r)) same.emplace_back(u, v);
    }
  }
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (auto [u, v] : same) {
      if (brute::outgoing(brute::port_path(t, u, c)) != brute::outgoing(brute::port_path(t, v, c))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Simple paths from v with exactly r edges ending at a node of degree >= 2.
inline std::vector<std::vector<Node>> endless_paths(const PortTree& t, Node v, int r) {
  std::vector<std::vector<Node>> out;
  std::vector<Node> path{v};
  auto rec = [&](auto&& self, Node x, Node from) -> void {
    if (static_cast<int>(path.size()) - 1 == r) {
      if (t.degree(x) >= 2) out.push_back(path);
      return;
    }
    for (int p = 0; p < t.degree(x); ++p) {
      Node y = t.link(x, p).node;
      if (y == from) continue;
      path.push_back(y);
      self(self, y, x);
      path.pop_back();
    }
  };
  rec(rec, v, -1);
  return out;
}

// Random labelled trees from Pruefer codes, ports given by the caller.
inline std::vector<std::pair<int, int>> pruefer_edges(const std::vector<int>& code, int n) {
  std::vector<std::pair<int, int>> edges;
  if (n == 2) return {{0, 1}};
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
      }
    }
  }
  return edges;
}

// Every port labelling of every labelled tree on n nodes.
inline std::vector<PortTree> all_port_trees(int n) {
  if (n == 1) return {PortTree()};
  std::vector<PortTree> out;
  std::vector<int> code(std::max(0, n - 2), 0);
  while (true) {
    auto edges = brute::pruefer_edges(code, n);
    std::vector<std::vector<int>> inc(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      inc[edges[e].first].push_back(static_cast<int>(e));
      inc[edges[e].second].push_back(static_cast<int>(e));
    }
    std::vector<std::vector<int>> order = inc;
    for (auto& o : order) std::sort(o.begin(), o.end());
    // Odometer over the permutations at each node.
    while (true) {
      RawAdjacency raw(n);
      std::vector<std::vector<int>> port(edges.size(), std::vector<int>(2));
      for (int v = 0; v < n; ++v) {
        for (std::size_t p = 0; p < order[v].size(); ++p) {
          int e = order[v][p];
          port[e][edges[e].first == v ? 0 : 1] = static_cast<int>(p);
        }
      }
      for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        raw[a].push_back({port[e][0], b, port[e][1]});
        raw[b].push_back({port[e][1], a, port[e][0]});
      }
      out.push_back(PortTree::from_raw(raw));
      int v = 0;
      while (v < n && !std::next_permutation(order[v].begin(), order[v].end())) ++v;
      if (v == n) break;
    }
    int i = 0;
    while (i < n - 2 && ++code[i] == n) code[i++] = 0;
    if (i == n - 2) break;
  }
  return out;
}

// One representative per rooted port-preserving isomorphism class, n <= max_n.
inline std::vector<std::pair<PortTree, Node>> rooted_classes(int max_n) {
  std::vector<std::pair<PortTree, Node>> reps;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& t : brute::all_port_trees(n)) {
      for (Node r = 0; r < n; ++r) {
        bool fresh = true;
        for (const auto& [u, ru] : reps) {
          if (u.node_count() == n && brute::rooted_isomorphic(t, r, u, ru)) {
            fresh = false;
            break;
          }
        }
        if (fresh) reps.emplace_back(t, r);
      }
    }
  }
  return reps;
}

}  // namespace brute

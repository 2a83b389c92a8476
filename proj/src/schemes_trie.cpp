#include <algorithm>
#include <cmath>
#include <set>

#include "scheme_util.hpp"
#include "treelect/oracles.hpp"
#include "treelect/schemes.hpp"

namespace treelect {

using detail::sequences_from;

namespace {

// A rooted tree over arbitrary ids; children in increasing port order.
struct Layout {
  int root = 0;
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> preorder;  // -1 for ids outside the tree
  std::vector<std::vector<int>> children;
};

void number_preorder(Layout& lay) {
  int next = 0;
  std::vector<int> stack{lay.root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    lay.preorder[x] = next++;
    for (auto it = lay.children[x].rbegin(); it != lay.children[x].rend(); ++it) stack.push_back(*it);
  }
}

struct Reps {
  std::vector<int> reps;
  std::vector<int> covered_by;  // per leaf id: index into reps, -1 if never covered
};

// Deepest uncovered leaf first; among equally deep leaves the one whose
// port path from the root is lexicographically smallest (= smallest preorder).
Reps greedy_reps(const Layout& lay, int eps) {
  const int n = static_cast<int>(lay.parent.size());
  std::vector<int> leaves;
  for (int x = 0; x < n; ++x) {
    if (lay.preorder[x] >= 0 && lay.children[x].empty() && lay.depth[x] >= eps - 1) leaves.push_back(x);
  }
  std::sort(leaves.begin(), leaves.end(), [&](int a, int b) {
    if (lay.depth[a] != lay.depth[b]) return lay.depth[a] > lay.depth[b];
    return lay.preorder[a] < lay.preorder[b];
  });
  Reps out;
  out.covered_by.assign(n, -1);
  for (int leaf : leaves) {
    if (out.covered_by[leaf] >= 0) continue;
    int r = leaf;
    for (int i = 0; i < eps - 1; ++i) r = lay.parent[r];
    const int idx = static_cast<int>(out.reps.size());
    out.reps.push_back(r);
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (lay.children[x].empty() && out.covered_by[x] < 0) out.covered_by[x] = idx;
      for (int c : lay.children[x]) stack.push_back(c);
    }
  }
  return out;
}

}  // namespace

int eps_floor(int diam, int tau) { return tau - (diam + 1) / 2; }

std::vector<Node> compute_reps(const PortTree& t, Node root, int eps) {
  if (eps < 1) throw Error(Errc::BadParameters, "eps_floor must be >= 1");
  Rooting r = root_at(t, root);
  Layout lay;
  lay.root = root;
  lay.parent = r.parent;
  lay.depth = r.depth;
  lay.preorder.assign(t.node_count(), -1);
  lay.children.assign(t.node_count(), {});
  for (Node v = 0; v < t.node_count(); ++v) {
    for (int p = 0; p < t.degree(v); ++p) {
      Node w = t.link(v, p).node;
      if (w != r.parent[v]) lay.children[v].push_back(w);
    }
  }
  number_preorder(lay);
  return greedy_reps(lay, eps).reps;
}

Node trie_root(const PortTree& t) {
  Centre c = centre(t);
  return c.is_edge() ? detail::smaller_endpoint(t, c.a, *c.b) : c.a;
}

int find_representative(const View& view, int eps) {
  if (eps < 1) throw Error(Errc::BadParameters, "eps_floor must be >= 1");
  const int g = gateway(view);
  if (view.depth(g) < eps) throw Error(Errc::IncompleteView, "gateway too close to locate the representative");
  const int w = view.ancestor_at_depth(g, eps - 1);
  const int up = view.ancestor_at_depth(g, eps);

  // The part of the view hanging below w once the edge towards up is cut.
  const int n = view.node_count();
  Layout lay;
  lay.root = w;
  lay.parent.assign(n, -1);
  lay.depth.assign(n, -1);
  lay.preorder.assign(n, -1);
  lay.children.assign(n, {});
  lay.depth[w] = 0;
  std::vector<int> queue{w};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    if (!view.complete(x)) throw Error(Errc::IncompleteView, "subtree below the representative level is cut off");
    for (int p = 0; p < view.degree(x); ++p) {
      const int y = view.find_link(x, p)->node;
      if (y == lay.parent[x] || (x == w && y == up)) continue;
      lay.parent[y] = x;
      lay.depth[y] = lay.depth[x] + 1;
      lay.children[x].push_back(y);
      queue.push_back(y);
    }
  }
  number_preorder(lay);
  Reps reps = greedy_reps(lay, eps);

  // Leaf below the viewer with the smallest port path from it.
  int leaf = -1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (lay.children[x].empty() && (leaf < 0 || lay.preorder[x] < lay.preorder[leaf])) leaf = x;
    for (int c : lay.children[x]) stack.push_back(c);
  }
  if (leaf < 0 || reps.covered_by[leaf] < 0) throw Error(Errc::BadAdvice, "no representative covers the viewer");
  return reps.reps[reps.covered_by[leaf]];
}

namespace {

std::optional<std::string> trie_check(const PortTree& t, int tau, double beta) {
  const int d = diameter(t);
  if (tau > d - 3) return "needs tau <= diameter - 3";
  if (static_cast<double>(tau) < beta * d) return "needs tau >= beta * diameter";
  const int eps = eps_floor(d, tau);
  if (eps < 1) return "needs tau > diameter/2 + 1";
  if (d % 2 == 1 && eps < 2) return "odd diameter needs tau >= ceil(diameter/2) + 2";
  if (is_symmetric(t)) return "symmetric tree";
  FeasibilityResult f = xi(t);
  if (!f.xi || *f.xi > tau) return "xi exceeds tau";
  return std::nullopt;
}

AdviceBits trie_oracle(const PortTree& t, int tau) {
  const int d = diameter(t);
  const int h = d / 2;
  const int eps = eps_floor(d, tau);
  if (eps < 1 || tau > d - 3) throw Error(Errc::TimeOutOfRange, "tau " + std::to_string(tau));
  const Node c = trie_root(t);
  std::set<std::pair<BitString, int>> entries;
  for (Node rep : compute_reps(t, c, eps)) {
    std::vector<PortSeq> list = sequences_from(t, rep, 2 * h, false);
    PortSeq target = path_and_seq(t, rep, c).seq;
    auto it = std::lower_bound(list.begin(), list.end(), target);
    if (it == list.end() || *it != target) throw Error(Errc::TimeOutOfRange, "root is farther than half the diameter from a representative");
    const int z = static_cast<int>(it - list.begin()) + 1;
    entries.emplace(view_signature(extract_view(t, rep, h)), z);
  }
  Trie trie;
  try {
    trie = build_trie({entries.begin(), entries.end()});
  } catch (const Error& e) {
    if (e.code() == Errc::DuplicateStrings) throw Error(Errc::XiTooLarge, "two representatives share a view: " + e.detail());
    throw;
  }
  AdviceBits b;
  put_gamma(b, static_cast<std::uint64_t>(d));
  put_gamma(b, static_cast<std::uint64_t>(tau));
  encode_trie(trie, b);
  return b;
}

PortSeq trie_elect(const View& view, const AdviceBits& advice) {
  const TrieAdvice a = decode_trie_advice(advice);
  if (view.radius() != a.tau) throw Error(Errc::RadiusMismatch, "view radius differs from the advised time");
  const int d = a.diameter;
  const int h = d / 2;
  if (classify_paths(view).endless.empty()) {
    PortTree map = view.to_tree();
    return outgoing_ports(path_and_seq(map, 0, trie_root(map)).seq);
  }
  const int rep = find_representative(view, eps_floor(d, a.tau));
  const int z = retrieve(a.trie, view_signature(view.subview(rep, h)));
  std::vector<PortSeq> list = sequences_from(view, rep, 2 * h, false);
  if (z < 1 || static_cast<std::size_t>(z) > list.size()) throw Error(Errc::BadAdvice, "trie value out of range");
  int at = rep;
  for (int p : outgoing_ports(list[z - 1])) at = view.find_link(at, p)->node;
  // The walk viewer -> rep -> leader simplifies to the tree path viewer -> leader.
  return view.ports_from_root(at);
}

}  // namespace

TrieAdvice decode_trie_advice(const BitString& bits) {
  BitReader in(bits);
  TrieAdvice a;
  a.diameter = static_cast<int>(in.get_gamma());
  a.tau = static_cast<int>(in.get_gamma());
  a.trie = decode_trie(in);
  if (!in.at_end()) throw Error(Errc::BadAdvice, "trailing bits after trie advice");
  return a;
}

AdviceScheme trie_scheme(double beta) {
  if (!(beta > 0.5 && beta < 1.0)) throw Error(Errc::BadParameters, "trie scheme needs 1/2 < beta < 1");
  AdviceScheme s;
  s.name = "trie";
  s.check = [beta](const PortTree& t, int tau) { return trie_check(t, tau, beta); };
  s.oracle = trie_oracle;
  s.program = trie_elect;
  s.default_time = [beta](const PortTree& t) { return static_cast<int>(std::ceil(beta * diameter(t))); };
  return s;
}

}  // namespace treelect

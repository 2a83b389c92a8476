#include "treelect/port_tree.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace treelect {

namespace {

std::string node_str(Node v) { return "node " + std::to_string(v); }

}  // namespace

std::optional<Error> validate(const RawAdjacency& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) return Error(Errc::NotConnected, "tree has no nodes");

  // Ports at each node must be exactly 0..deg-1.
  for (int v = 0; v < n; ++v) {
    std::vector<char> seen(raw[v].size(), 0);
    for (const auto& e : raw[v]) {
      if (e.port < 0 || e.port >= static_cast<int>(raw[v].size()) || seen[e.port]) {
        return Error(Errc::PortGap, node_str(v) + " has ports that are not 0.." +
                                        std::to_string(static_cast<int>(raw[v].size()) - 1));
      }
      seen[e.port] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    for (const auto& e : raw[v]) {
      if (e.node < 0 || e.node >= n) {
        return Error(Errc::AsymmetricAdjacency, node_str(v) + " port " + std::to_string(e.port) +
                                                    " points outside the tree");
      }
      if (e.node == v) return Error(Errc::HasCycle, node_str(v) + " has a self-loop");
      const auto& back = raw[e.node];
      auto it = std::find_if(back.begin(), back.end(), [&](const PortEntry& b) { return b.port == e.reverse; });
      if (it == back.end() || it->node != v || it->reverse != e.port) {
        return Error(Errc::AsymmetricAdjacency, "edge " + node_str(v) + " port " + std::to_string(e.port) +
                                                    " -> " + node_str(e.node) + " port " +
                                                    std::to_string(e.reverse) + " has no matching reverse entry");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> targets;
    for (const auto& e : raw[v]) targets.push_back(e.node);
    std::sort(targets.begin(), targets.end());
    auto dup = std::adjacent_find(targets.begin(), targets.end());
    if (dup != targets.end()) {
      return Error(Errc::HasCycle, "parallel edges between " + node_str(v) + " and " + node_str(*dup));
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : raw[v]) {
      if (!seen[e.node]) {
        seen[e.node] = 1;
        ++reached;
        stack.push_back(e.node);
      }
    }
  }
  if (reached != n) {
    int first = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    return Error(Errc::NotConnected, node_str(first) + " is not reachable from node 0");
  }
  std::size_t half_edges = 0;
  for (const auto& row : raw) half_edges += row.size();
  if (half_edges / 2 != static_cast<std::size_t>(n - 1)) {
    return Error(Errc::HasCycle, std::to_string(half_edges / 2) + " edges on " + std::to_string(n) + " nodes");
  }
  return std::nullopt;
}

PortTree PortTree::from_raw(const RawAdjacency& raw) {
  if (auto err = validate(raw)) throw *err;
  PortTree t;
  t.adj_.assign(raw.size(), {});
  for (std::size_t v = 0; v < raw.size(); ++v) {
    t.adj_[v].resize(raw[v].size());
    for (const auto& e : raw[v]) t.adj_[v][e.port] = Link{e.node, e.reverse};
  }
  return t;
}

RawAdjacency PortTree::raw() const {
  RawAdjacency out(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    for (int p = 0; p < static_cast<int>(adj_[v].size()); ++p) {
      out[v].push_back(PortEntry{p, adj_[v][p].node, adj_[v][p].port});
    }
  }
  return out;
}

PortTree PortTree::relabeled(std::span<const Node> perm) const {
  PortTree t;
  t.adj_.assign(adj_.size(), {});
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& row = t.adj_[perm[v]];
    row = adj_[v];
    for (auto& l : row) l.node = perm[l.node];
  }
  return t;
}

bool PortTree::operator==(const PortTree& o) const { return adj_ == o.adj_; }

Node TreeBuilder::add_node() {
  entries_.emplace_back();
  return static_cast<Node>(entries_.size() - 1);
}

void TreeBuilder::connect(Node a, Port pa, Node b, Port pb) {
  entries_[a].push_back(PortEntry{pa, b, pb});
  entries_[b].push_back(PortEntry{pb, a, pa});
}

Node TreeBuilder::grow(Node a, Port pa, Port pb) {
  Node b = add_node();
  connect(a, pa, b, pb);
  return b;
}

PortTree TreeBuilder::build() const { return PortTree::from_raw(entries_); }

Rooting root_at(const PortTree& t, Node root) {
  const int n = t.node_count();
  Rooting r;
  r.root = root;
  r.parent.assign(n, -1);
  r.depth.assign(n, -1);
  r.down_port.assign(n, -1);
  r.order.reserve(n);
  r.depth[root] = 0;
  r.order.push_back(root);
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    Node v = r.order[i];
    for (int p = 0; p < t.degree(v); ++p) {
      Node w = t.link(v, p).node;
      if (r.depth[w] >= 0) continue;
      r.depth[w] = r.depth[v] + 1;
      r.parent[w] = v;
      r.down_port[w] = p;
      r.order.push_back(w);
    }
  }
  return r;
}

std::vector<int> distances_from(const PortTree& t, Node s) { return root_at(t, s).depth; }

PathSeq path_and_seq(const PortTree& t, Node a, Node b) {
  // Root at b and walk up from a.
  Rooting r = root_at(t, b);
  PathSeq out;
  Node v = a;
  out.nodes.push_back(v);
  while (v != b) {
    Node up = r.parent[v];
    Port down = r.down_port[v];
    Port here = t.link(up, down).port;
    out.seq.push_back(here);
    out.seq.push_back(down);
    v = up;
    out.nodes.push_back(v);
  }
  return out;
}

PortSeq outgoing_ports(const PortSeq& seq) {
  PortSeq out;
  for (std::size_t i = 0; i < seq.size(); i += 2) out.push_back(seq[i]);
  return out;
}

std::optional<Node> follow(const PortTree& t, Node start, const PortSeq& outgoing) {
  Node v = start;
  for (int p : outgoing) {
    if (p < 0 || p >= t.degree(v)) return std::nullopt;
    v = t.link(v, p).node;
  }
  return v;
}

namespace {

Node farthest(const std::vector<int>& dist) {
  return static_cast<Node>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

int diameter(const PortTree& t) {
  Node a = farthest(distances_from(t, 0));
  auto d = distances_from(t, a);
  return d[farthest(d)];
}

Centre centre(const PortTree& t) {
  Node a = farthest(distances_from(t, 0));
  auto da = distances_from(t, a);
  Node b = farthest(da);
  PathSeq p = path_and_seq(t, a, b);
  Centre c;
  c.diameter = da[b];
  const int d = c.diameter;
  c.a = p.nodes[d / 2];
  if (d % 2 == 1) c.b = p.nodes[d / 2 + 1];
  return c;
}

}  // namespace treelect

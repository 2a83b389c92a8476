#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <vector>

#include "treelect/error.hpp"

namespace treelect {

using Node = int;
using Port = int;
// Alternating out/in ports along a path: (out at a, in at next, out, in, ...).
using PortSeq = std::vector<int>;

// Neighbour reached through a port, and the port at that neighbour.
struct Link {
  Node node = -1;
  Port port = -1;
  bool operator==(const Link&) const = default;
};

// One "p:j:q" token of the tree file format.
struct PortEntry {
  Port port = 0;
  Node node = 0;
  Port reverse = 0;
};
using RawAdjacency = std::vector<std::vector<PortEntry>>;

// Returns the first problem found, naming the offending node or edge.
std::optional<Error> validate(const RawAdjacency& raw);

class PortTree {
 public:
  PortTree() : adj_(1) {}
  // Throws Error when validate() fails.
  static PortTree from_raw(const RawAdjacency& raw);

  int node_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return node_count() - 1; }
  int degree(Node v) const { return static_cast<int>(adj_[v].size()); }
  Link link(Node v, Port p) const { return adj_[v][p]; }
  std::optional<Link> find_link(Node v, Port p) const { return adj_[v][p]; }
  const std::vector<Link>& links(Node v) const { return adj_[v]; }

  RawAdjacency raw() const;
  // Node v of this tree becomes node perm[v].
  PortTree relabeled(std::span<const Node> perm) const;

  bool operator==(const PortTree& o) const;

 private:
  friend class TreeBuilder;
  std::vector<std::vector<Link>> adj_;
};

// Incremental construction; build() validates.
class TreeBuilder {
 public:
  Node add_node();
  int node_count() const { return static_cast<int>(entries_.size()); }
  // Edge with port pa at a and port pb at b.
  void connect(Node a, Port pa, Node b, Port pb);
  // Fresh node attached to a via ports pa (at a) and pb (at the new node).
  Node grow(Node a, Port pa, Port pb);
  PortTree build() const;

 private:
  RawAdjacency entries_;
};

// Anything exposing node_count/degree/find_link: port trees and views.
template <class G>
concept PortGraph = requires(const G& g, int x, int p) {
  { g.node_count() } -> std::convertible_to<int>;
  { g.degree(x) } -> std::convertible_to<int>;
  { g.find_link(x, p) } -> std::same_as<std::optional<Link>>;
};

struct PathSeq {
  std::vector<Node> nodes;  // a ... b
  PortSeq seq;              // length 2 * (nodes.size() - 1)
};

PathSeq path_and_seq(const PortTree& t, Node a, Node b);
// Odd-indexed terms (1-based) of a port sequence.
PortSeq outgoing_ports(const PortSeq& seq);
// Follows outgoing ports from start; nullopt on an invalid port.
std::optional<Node> follow(const PortTree& t, Node start, const PortSeq& outgoing);

std::vector<int> distances_from(const PortTree& t, Node s);
int diameter(const PortTree& t);

struct Centre {
  int diameter = 0;
  Node a = 0;
  std::optional<Node> b;  // set when the centre is an edge
  bool is_edge() const { return b.has_value(); }
};
Centre centre(const PortTree& t);

// Rooted at `root`: parent, depth and port at the parent leading down.
struct Rooting {
  Node root = 0;
  std::vector<Node> parent;
  std::vector<int> depth;
  std::vector<Port> down_port;  // port at parent(v) leading to v
  std::vector<Node> order;      // BFS order
};
Rooting root_at(const PortTree& t, Node root);

}  // namespace treelect

#pragma once

#include <algorithm>
#include <climits>
#include <vector>

#include "treelect/port_tree.hpp"
#include "treelect/tree_code.hpp"
#include "treelect/view.hpp"

namespace treelect::detail {

// Port sequences of simple paths leaving start, at most max_ports long.
// With prefixes set, odd-length sequences ending in an outgoing port are
// included too. The port (start, skip_port) is never taken.
template <PortGraph G>
class SequenceWalker {
 public:
  SequenceWalker(const G& g, int max_ports, bool prefixes) : g_(g), max_(max_ports), prefixes_(prefixes) {}

  std::vector<PortSeq> run(int start, int skip_port = -1) {
    out_.clear();
    PortSeq cur;
    walk(start, -1, skip_port, cur);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void walk(int x, int entry, int skip, PortSeq& cur) {
    out_.push_back(cur);
    const int len = static_cast<int>(cur.size());
    if (len + 1 > max_) return;
    for (int p = 0; p < g_.degree(x); ++p) {
      if (p == entry || p == skip) continue;
      if (prefixes_) {
        cur.push_back(p);
        out_.push_back(cur);
        cur.pop_back();
      }
      if (len + 2 > max_) continue;
      std::optional<Link> l = g_.find_link(x, p);
      if (!l) throw Error(Errc::IncompleteView, "path enumeration leaves the view");
      cur.push_back(p);
      cur.push_back(l->port);
      walk(l->node, l->port, -1, cur);
      cur.resize(len);
    }
  }

  const G& g_;
  int max_;
  bool prefixes_;
  std::vector<PortSeq> out_;
};

template <PortGraph G>
std::vector<PortSeq> sequences_from(const G& g, int start, int max_ports, bool prefixes, int skip_port = -1) {
  return SequenceWalker<G>(g, max_ports, prefixes).run(start, skip_port);
}

inline constexpr int kUnbounded = INT_MAX / 2;

// Outgoing ports from node 0 of a map to its canonical root.
inline PortSeq elect_canonical(const PortTree& map) {
  return outgoing_ports(path_and_seq(map, 0, canonical_root(map)).seq);
}

// Central-edge endpoint with the smaller rooted code (the first on a tie).
inline Node smaller_endpoint(const PortTree& t, Node a, Node b) {
  return rooted_code(t, b) < rooted_code(t, a) ? b : a;
}

// Port at x leading to neighbour y.
template <PortGraph G>
int port_towards(const G& g, int x, int y) {
  for (int p = 0; p < g.degree(x); ++p) {
    auto l = g.find_link(x, p);
    if (l && l->node == y) return p;
  }
  throw Error(Errc::BadParameters, "nodes are not adjacent");
}

}  // namespace treelect::detail

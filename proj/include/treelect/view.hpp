#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treelect/bits.hpp"
#include "treelect/port_tree.hpp"

namespace treelect {

// What a node learns in r rounds: the radius-r ball around it with every
// port at nodes closer than r, and the degree (plus the port back towards
// the viewer) of each node at distance exactly r. Local node 0 is the viewer
// and a parent always has a smaller local id than its children.
class View {
 public:
  int radius() const { return radius_; }
  int node_count() const { return static_cast<int>(slots_.size()); }
  int degree(int x) const { return slots_[x].degree; }
  int depth(int x) const { return slots_[x].depth; }
  int parent(int x) const { return slots_[x].parent; }
  // Port at x leading towards the viewer; -1 at the viewer.
  Port up_port(int x) const { return slots_[x].up_port; }
  std::optional<Link> find_link(int x, int p) const { return slots_[x].links[p]; }

  bool complete(int x) const;
  // Every port of every node is known, so the view is the whole tree.
  bool saturated() const;
  std::vector<int> children(int x) const;
  int ancestor_at_depth(int x, int d) const;
  PortSeq seq_from_root(int x) const;
  PortSeq ports_from_root(int x) const { return outgoing_ports(seq_from_root(x)); }
  std::vector<int> distances_from(int x) const;

  // Only for saturated views; local ids are kept.
  PortTree to_tree() const;
  // Radius-r view of local node x, cut out of this view. Throws IncompleteView
  // when the requested ball is not fully contained.
  View subview(int x, int r) const;

  // Index-free encoding; equal iff the views carry the same information.
  std::vector<int> canonical_form() const;

  // Incremental construction, outward from the viewer.
  static View with_root(int degree, int radius);
  // New node at depth(parent)+1 reached through parent_port, entering on child_port.
  int add_child(int parent, Port parent_port, Port child_port, int child_degree);

  template <PortGraph G>
  friend View extract_ball(const G& g, int start, int r);

 private:
  struct Slot {
    int degree = 0;
    int depth = 0;
    int parent = -1;
    Port up_port = -1;
    std::vector<std::optional<Link>> links;
  };
  int radius_ = 0;
  std::vector<Slot> slots_;
};

template <PortGraph G>
View extract_ball(const G& g, int start, int r) {
  View view;
  view.radius_ = r;
  std::vector<int> local(static_cast<std::size_t>(g.node_count()), -1);
  std::vector<int> origin{start};
  local[start] = 0;
  view.slots_.push_back(View::Slot{g.degree(start), 0, -1, -1, {}});
  view.slots_[0].links.resize(g.degree(start));
  for (std::size_t i = 0; i < view.slots_.size(); ++i) {
    const int x = static_cast<int>(i);
    if (view.slots_[x].depth >= r) continue;
    const int gx = origin[x];
    for (int p = 0; p < g.degree(gx); ++p) {
      std::optional<Link> l = g.find_link(gx, p);
      if (!l) throw Error(Errc::IncompleteView, "ball of radius " + std::to_string(r) + " leaves the known region");
      if (local[l->node] >= 0) {
        view.slots_[x].links[p] = Link{local[l->node], l->port};
        continue;
      }
      const int y = view.node_count();
      local[l->node] = y;
      origin.push_back(l->node);
      View::Slot s{g.degree(l->node), view.slots_[x].depth + 1, x, l->port, {}};
      s.links.resize(s.degree);
      s.links[l->port] = Link{x, p};
      view.slots_.push_back(std::move(s));
      view.slots_[x].links[p] = Link{y, l->port};
    }
  }
  return view;
}

View extract_view(const PortTree& t, Node v, int r);
bool views_equal(const View& a, const View& b);

// Root-anchored paths, each named by its far endpoint.
// Endless: length exactly r, ending at a node of degree >= 2.
// Terminated: ending at a node of degree 1 (the viewer included).
struct PathClasses {
  std::vector<int> endless;
  std::vector<int> terminated;
};
PathClasses classify_paths(const View& view);
// Deepest node shared by all endless paths. Throws NoEndlessPaths.
int gateway(const View& view);

// From a radius diam-1 view: hang the missing leaves off every endless
// endpoint. The viewer becomes node 0. Throws RadiusMismatch.
PortTree reconstruct_tree(const View& view, int diam);

// Self-delimiting (prefix-free) bit encoding of a view; injective on views
// of equal radius.
BitString view_signature(const View& view);

// Tree format with the known ports, followed by radius/root/frontier lines.
std::string format_view(const View& view);

}  // namespace treelect

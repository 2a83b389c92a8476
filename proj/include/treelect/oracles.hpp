#pragma once

#include <optional>
#include <vector>

#include "treelect/port_tree.hpp"

namespace treelect {

// classes[r][v]: dense id of the radius-r view of v, for r = 0..max_radius.
// Two nodes share an id iff their views are equal.
std::vector<std::vector<int>> view_classes(const PortTree& t, int max_radius);

// A leader that every view class can point to consistently at one radius.
struct Certificate {
  int radius = 0;
  Node leader = 0;
  std::vector<int> class_of;          // per node
  std::vector<PortSeq> class_output;  // outgoing ports from any class member to the leader
};

// Every node c such that all nodes with equal radius-r views have identical
// outgoing-port sequences towards c.
std::vector<Node> feasible_leaders(const PortTree& t, const std::vector<int>& class_of);
// Canonical certificate at radius r: among feasible leaders, the one with the
// smallest rooted code. nullopt when no leader is feasible.
std::optional<Certificate> feasibility_at(const PortTree& t, int r);

struct FeasibilityResult {
  std::optional<int> xi;  // nullopt: infeasible at every radius
  std::optional<Certificate> certificate;
  std::vector<int> class_counts;  // radius 0 .. xi (or .. diameter when infeasible)
  bool feasible() const { return xi.has_value(); }
};
// Smallest radius at which election is possible with a full map.
FeasibilityResult xi(const PortTree& t);

// Outputs of the canonical certificate at radius tau.
// Throws SymmetricTree or TimeTooShort.
std::vector<PortSeq> map_based_election(const PortTree& t, int tau);

}  // namespace treelect

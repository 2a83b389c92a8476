#pragma once

#include <cstdint>
#include <vector>

#include "treelect/port_tree.hpp"

namespace treelect {

// Path on nodes 0..len with the given port sequence from node 0 to node len.
PortTree path_from_seq(const PortSeq& seq);
// Path of length k; the sequence from node 0 to node k is (0,0,1,0,...,1,0).
PortTree gen_path(int k);
// Length-6 line whose port sequence from left to right is 0,0,1,1,0,0,1,1,0,1,0,0.
PortTree gen_intro_line();

// --- random trees

// Uniform labelled shape (Pruefer code) with random port numbers.
PortTree gen_random(int n, std::uint64_t seed);
// Random tree of exactly the given diameter: a spine plus depth-capped branches.
PortTree gen_random_diameter(int n, int diam, std::uint64_t seed);
// A centre with legs of the given lengths, random ports.
PortTree gen_spider(const std::vector<int>& legs, std::uint64_t seed);

// --- double brooms

// Positive integer tuples of a fixed length, ordered by sum and then
// colexicographically; rank 1 is (1,...,1).
std::vector<int> unrank_composition(std::uint64_t rank, int parts);
std::uint64_t rank_composition(const std::vector<int>& parts);

struct DoubleBroom {
  PortTree tree;
  Node va = 0;  // handle ends
  Node vb = 0;
  std::vector<int> a_leaves;  // leaves under each broom child, delta+1 entries
  std::vector<int> b_leaves;
};
int double_broom_size(int delta, int diam);
// Odd diam >= 7, 1 <= a < b <= delta^delta.
DoubleBroom gen_double_broom(int delta, std::uint64_t a, std::uint64_t b, int diam);

// --- trees with a central edge and k arms per side

struct GSigma {
  PortTree tree;
  PortTree core;  // the same nodes without the height-2 gadgets
  Node c0 = 0;
  Node c1 = 0;
  int k = 0;
  std::vector<Node> p;  // arm ends on the c0 side, index 1..k (0 unused)
  std::vector<Node> q;  // arm ends on the c1 side
  std::vector<Node> p_leaf;  // one gadget leaf below each p_i (-1 if none)
  std::vector<Node> q_leaf;
};
// k = ceil(n / diam) arms; gadgets swapped for the indices in sigma (subset of 2..k).
GSigma gen_gsigma_odd(int n, int diam, const std::vector<int>& sigma);
// k = ceil(n / (diam - 1)).
GSigma gen_gsigma_even(int n, int diam, const std::vector<int>& sigma);

// --- template trees with free edges and markers

struct TemplateDims {
  int k = 0;               // number of paths
  int tau = 0;             // floor(alpha * diam)
  int fixed = 0;           // nodes per path with fixed ports
  int free_nodes = 0;      // nodes per path next to the centre with free ports
  int markers_per_path = 0;
  int marker_y = 0;
  int marker_leaves = 0;   // y^2
  int marker_degree = 0;   // ceil(y^1.5) first-level nodes
  long long marker_supply = 0;
  int free_edges() const { return k * free_nodes / 2; }
};
// marker_y = 0 picks the smallest y >= 2 that supplies enough distinct markers.
TemplateDims template_dims(int n, int diam, double alpha, int marker_y = 0);

struct TemplateTree {
  PortTree tree;
  Node c = 0;
  std::vector<Node> p;  // path ends, index 0..k-1
  TemplateDims dims;
};
// labels[i][j] in {0,1} sets free edge j of path i.
TemplateTree gen_template(int n, int diam, double alpha, const std::vector<std::vector<int>>& labels,
                          int marker_y = 0);

// --- confusion trees

struct ConfusionTree {
  PortTree tree;
  Node c = 0;
  std::vector<Node> w;  // children of the centre
  std::vector<Node> q;  // the nodes that carry the extra leaves
};
// diam = 2h, h >= 3. sigma has delta entries with sigma[0] = 0 and permutes 1..delta-1.
ConfusionTree gen_confusion(int delta, int h, const std::vector<int>& sigma);
// Node count of the confusion subtree of height x, by construction.
long long confusion_subtree_size(int delta, int x);
// 1 + delta + (x-2) + (delta-1)^2 * size(x-2), with size(0) = 1, size(1) = delta+1.
long long confusion_size_formula(int delta, int x);

}  // namespace treelect

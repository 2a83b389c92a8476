#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treelect/local_sim.hpp"
#include "treelect/trie.hpp"

namespace treelect {

struct AdviceScheme {
  std::string name;
  // Reason the scheme does not apply to (tree, tau); nullopt when it does.
  std::function<std::optional<std::string>(const PortTree&, int)> check;
  std::function<AdviceBits(const PortTree&, int)> oracle;
  NodeProgram program;
  // The election time the scheme is built for on this tree.
  std::function<int(const PortTree&)> default_time;
};

// Saturated views, no advice; the canonical root is elected.
AdviceScheme full_view_scheme();
// Advice: gamma(diam). Views of radius diam-1 are completed into the map.
AdviceScheme diam_minus_one_scheme();
// Even diameter, time diam-2, advice gamma(diam). Elects the central node.
AdviceScheme even_elect_scheme();
// Odd diameter, time diam-2, advice of O(log diam) bits. Elects a
// central-edge endpoint.
AdviceScheme odd_elect_scheme();
// Time tau in [beta*diam, diam-3], advice: gamma(diam) gamma(tau) trie.
AdviceScheme trie_scheme(double beta);
// Any time >= xi; advice: the canonical code of the tree.
AdviceScheme full_code_scheme();

// "full_view", "diam_minus_1", "even_elect", "odd_elect", "trie" (beta 0.7),
// "trie:<beta>", "full_code".
AdviceScheme scheme_by_name(const std::string& name);
std::vector<std::string> scheme_names();

// Throws NotApplicable with the scheme's reason when check() fails.
ElectionOutcome run_scheme(const PortTree& t, const AdviceScheme& s, int tau);

// --- odd diameter internals

struct OddLists {
  Node c0 = 0;  // central-edge endpoint with the smaller rooted code
  Node c1 = 0;
  bool separated = false;
  std::vector<PortSeq> l0;
  std::vector<PortSeq> l1;
};
// Throws EvenDiameter.
OddLists odd_lists(const PortTree& t);

struct OddAdvice {
  int diameter = 0;
  bool separated = false;
  int j = 0;  // 1-based list position where the lists first differ
  int k = 0;  // common prefix length of the j-th entries
  int m = 0;  // port following that prefix in the chosen list
  int p = 0;  // port from the other endpoint to the chosen one
};
// Throws EvenDiameter or ListsEqual.
OddAdvice odd_advice_build(const PortTree& t);
BitString encode_odd_advice(const OddAdvice& a);
OddAdvice decode_odd_advice(const BitString& bits);

// --- trie scheme internals

// floor(eps * diam) with eps = tau/diam - 1/2.
int eps_floor(int diam, int tau);
// Greedy cover of the leaves at depth >= eps_floor-1 of t rooted at root;
// representatives in selection order.
std::vector<Node> compute_reps(const PortTree& t, Node root, int eps_floor);
// Root used by the trie scheme: the central node, or for odd diameter the
// central-edge endpoint with the smaller rooted code.
Node trie_root(const PortTree& t);

struct TrieAdvice {
  int diameter = 0;
  int tau = 0;
  Trie trie;
};
TrieAdvice decode_trie_advice(const BitString& bits);
// Local id (in view) of the representative a deep node picks.
int find_representative(const View& view, int eps_floor);

}  // namespace treelect

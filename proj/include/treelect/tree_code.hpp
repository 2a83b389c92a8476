#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treelect/bits.hpp"
#include "treelect/port_tree.hpp"

namespace treelect {

// DFS from the root, children in increasing port order.
// shape: 0 = step down, 1 = step up (length 2(n-1)).
// entry: port at each non-root node leading back to its parent, in first-visit order.
struct TreeCode {
  std::vector<std::uint8_t> shape;
  std::vector<int> entry;

  std::strong_ordering operator<=>(const TreeCode&) const = default;
  bool operator==(const TreeCode&) const = default;
};

TreeCode rooted_code(const PortTree& t, Node root);
// Lexicographically smallest rooted code over all roots (shape first, then entry).
TreeCode canonical_code(const PortTree& t);
// A root achieving canonical_code; unique unless the tree is symmetric.
Node canonical_root(const PortTree& t);
// Inverse of rooted_code; the root becomes node 0. Throws BadCode.
PortTree decode(const TreeCode& code);

// Degree of every node in DFS first-visit order, read off the shape bits.
std::vector<int> code_degrees(const std::vector<std::uint8_t>& shape);

// Fixed-length injective encoding of rooted trees with at most bound_n nodes:
// shape padded with 1s to 2(bound_n-1) bits, then each entry port in
// ceil(log2 deg) bits, then zero padding up to signature_length(bound_n).
BitString signature(const PortTree& t, Node root, int bound_n);
std::size_t signature_length(int bound_n);

bool is_symmetric(const PortTree& t);

// Stable identifier: FNV-1a over the canonical code, as 16 hex digits.
std::string tree_hash(const PortTree& t);

}  // namespace treelect

#pragma once

#include <utility>
#include <vector>

#include "treelect/bits.hpp"

namespace treelect {

// Compressed binary trie over a prefix-free set of bit strings. An internal
// node labelled j branches on bit j of the remaining string and then drops
// the first j+1 bits; a leaf carries the value stored for its string.
struct TrieNode {
  bool leaf = false;
  int label = 0;
  int left = -1;
  int right = -1;
};

struct Trie {
  std::vector<TrieNode> nodes;  // nodes[0] is the root

  int node_count() const { return static_cast<int>(nodes.size()); }
  int leaf_count() const;
  int max_internal_label() const;  // -1 when there is no internal node
};

// Throws DuplicateStrings on a repeated string, NotPrefixFree when one string
// is a proper prefix of another.
Trie build_trie(const std::vector<std::pair<BitString, int>>& entries);
// Value stored for s; throws BadAdvice when s runs out before a leaf.
int retrieve(const Trie& trie, const BitString& s);

// Preorder: a flag bit (1 = leaf), then gamma(value) for a leaf or
// gamma(label + 1) for an internal node, then left and right subtrees.
void encode_trie(const Trie& trie, BitString& out);
Trie decode_trie(BitReader& in);

}  // namespace treelect

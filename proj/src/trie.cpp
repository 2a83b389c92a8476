#include "treelect/trie.hpp"

#include <algorithm>

#include "treelect/error.hpp"

namespace treelect {

int Trie::leaf_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const TrieNode& n) { return n.leaf; }));
}

int Trie::max_internal_label() const {
  int best = -1;
  for (const auto& n : nodes) {
    if (!n.leaf) best = std::max(best, n.label);
  }
  return best;
}

namespace {

using Entries = std::vector<std::pair<BitString, int>>;

int build(Trie& trie, const Entries& entries) {
  const int id = trie.node_count();
  trie.nodes.emplace_back();
  if (entries.size() == 1) {
    trie.nodes[id].leaf = true;
    trie.nodes[id].label = entries[0].second;
    return id;
  }
  // Longest common prefix of all strings.
  std::size_t lcp = entries[0].first.size();
  for (const auto& [s, value] : entries) {
    std::size_t i = 0;
    while (i < lcp && i < s.size() && s[i] == entries[0].first[i]) ++i;
    lcp = i;
  }
  Entries zero;
  Entries one;
  for (const auto& [s, value] : entries) {
    if (s.size() <= lcp) throw Error(Errc::NotPrefixFree, "string " + s.to_string() + " is a prefix of another");
    (s[lcp] ? one : zero).emplace_back(s.suffix(lcp + 1), value);
  }
  trie.nodes[id].label = static_cast<int>(lcp);
  int l = build(trie, zero);
  int r = build(trie, one);
  trie.nodes[id].left = l;
  trie.nodes[id].right = r;
  return id;
}

void encode_node(const Trie& trie, int id, BitString& out) {
  const TrieNode& n = trie.nodes[id];
  out.push_back(n.leaf);
  if (n.leaf) {
    put_gamma(out, static_cast<std::uint64_t>(n.label));
    return;
  }
  put_gamma(out, static_cast<std::uint64_t>(n.label) + 1);
  encode_node(trie, n.left, out);
  encode_node(trie, n.right, out);
}

int decode_node(Trie& trie, BitReader& in, int depth) {
  if (depth > 4096) throw Error(Errc::BadAdvice, "trie too deep");
  const int id = trie.node_count();
  trie.nodes.emplace_back();
  if (in.get()) {
    trie.nodes[id].leaf = true;
    trie.nodes[id].label = static_cast<int>(in.get_gamma());
    return id;
  }
  trie.nodes[id].label = static_cast<int>(in.get_gamma() - 1);
  int l = decode_node(trie, in, depth + 1);
  int r = decode_node(trie, in, depth + 1);
  trie.nodes[id].left = l;
  trie.nodes[id].right = r;
  return id;
}

}  // namespace

Trie build_trie(const std::vector<std::pair<BitString, int>>& entries) {
  if (entries.empty()) throw Error(Errc::BadParameters, "trie needs at least one string");
  std::vector<BitString> keys;
  for (const auto& e : entries) keys.push_back(e.first);
  std::sort(keys.begin(), keys.end());
  auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end()) throw Error(Errc::DuplicateStrings, "string " + dup->to_string() + " appears twice");
  Trie trie;
  build(trie, entries);
  return trie;
}

int retrieve(const Trie& trie, const BitString& s) {
  int id = 0;
  std::size_t pos = 0;
  while (!trie.nodes[id].leaf) {
    const TrieNode& n = trie.nodes[id];
    std::size_t bit = pos + static_cast<std::size_t>(n.label);
    if (bit >= s.size()) throw Error(Errc::BadAdvice, "key too short for the trie");
    id = s[bit] ? n.right : n.left;
    pos = bit + 1;
  }
  return trie.nodes[id].label;
}

void encode_trie(const Trie& trie, BitString& out) { encode_node(trie, 0, out); }

Trie decode_trie(BitReader& in) {
  Trie trie;
  decode_node(trie, in, 0);
  return trie;
}

}  // namespace treelect

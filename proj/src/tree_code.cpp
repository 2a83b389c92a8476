#include "treelect/tree_code.hpp"

#include <cstdio>

namespace treelect {

TreeCode rooted_code(const PortTree& t, Node root) {
  TreeCode code;
  const int n = t.node_count();
  code.shape.reserve(2 * static_cast<std::size_t>(n - 1));
  code.entry.reserve(n - 1);

  struct Frame {
    Node v;
    Port entry;  // -1 at the root
    Port next;
  };
  std::vector<Frame> stack{{root, -1, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.entry) ++f.next;
    if (f.next >= t.degree(f.v)) {
      stack.pop_back();
      if (!stack.empty()) code.shape.push_back(1);
      continue;
    }
    Link l = t.link(f.v, f.next++);
    code.shape.push_back(0);
    code.entry.push_back(l.port);
    stack.push_back(Frame{l.node, l.port, 0});
  }
  return code;
}

TreeCode canonical_code(const PortTree& t) { return rooted_code(t, canonical_root(t)); }

Node canonical_root(const PortTree& t) {
  Node best = 0;
  TreeCode best_code = rooted_code(t, 0);
  for (Node v = 1; v < t.node_count(); ++v) {
    TreeCode c = rooted_code(t, v);
    if (c < best_code) {
      best_code = std::move(c);
      best = v;
    }
  }
  return best;
}

std::vector<int> code_degrees(const std::vector<std::uint8_t>& shape) {
  std::vector<int> deg{0};
  std::vector<int> stack{0};
  for (std::uint8_t b : shape) {
    if (b == 0) {
      int id = static_cast<int>(deg.size());
      ++deg[stack.back()];
      deg.push_back(1);
      stack.push_back(id);
    } else {
      if (stack.size() <= 1) throw Error(Errc::BadCode, "shape climbs above the root");
      stack.pop_back();
    }
  }
  if (stack.size() != 1) throw Error(Errc::BadCode, "shape does not return to the root");
  return deg;
}

PortTree decode(const TreeCode& code) {
  std::vector<int> deg = code_degrees(code.shape);
  const int n = static_cast<int>(deg.size());
  if (static_cast<int>(code.entry.size()) != n - 1) throw Error(Errc::BadCode, "entry length does not match shape");
  std::vector<int> entry(n, -1);
  for (int i = 1; i < n; ++i) {
    entry[i] = code.entry[i - 1];
    if (entry[i] < 0 || entry[i] >= deg[i]) {
      throw Error(Errc::BadCode, "entry port " + std::to_string(entry[i]) + " out of range at node " +
                                     std::to_string(i));
    }
  }
  TreeBuilder b;
  for (int i = 0; i < n; ++i) b.add_node();
  std::vector<int> next_port(n, 0);
  auto take_port = [&](int v) {
    if (next_port[v] == entry[v]) ++next_port[v];
    return next_port[v]++;
  };
  std::vector<int> stack{0};
  int next_id = 1;
  for (std::uint8_t bit : code.shape) {
    if (bit == 0) {
      int parent = stack.back();
      int child = next_id++;
      b.connect(parent, take_port(parent), child, entry[child]);
      stack.push_back(child);
    } else {
      stack.pop_back();
    }
  }
  return b.build();
}

std::size_t signature_length(int bound_n) {
  if (bound_n <= 1) return 0;
  return 2 * static_cast<std::size_t>(bound_n - 1) + static_cast<std::size_t>(bound_n - 2);
}

BitString signature(const PortTree& t, Node root, int bound_n) {
  const int n = t.node_count();
  if (n > bound_n) {
    throw Error(Errc::BoundExceeded, std::to_string(n) + " nodes exceed bound " + std::to_string(bound_n));
  }
  TreeCode code = rooted_code(t, root);
  BitString out;
  for (auto b : code.shape) out.push_back(b != 0);
  while (out.size() < 2 * static_cast<std::size_t>(bound_n - 1)) out.push_back(true);
  std::vector<int> deg = code_degrees(code.shape);
  for (int i = 1; i < n; ++i) put_bits(out, static_cast<std::uint64_t>(code.entry[i - 1]), ceil_log2(deg[i]));
  while (out.size() < signature_length(bound_n)) out.push_back(false);
  return out;
}

bool is_symmetric(const PortTree& t) {
  Centre c = centre(t);
  if (!c.is_edge()) return false;
  return rooted_code(t, c.a) == rooted_code(t, *c.b);
}

std::string tree_hash(const PortTree& t) {
  TreeCode code = canonical_code(t);
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  auto mix_int = [&](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) mix((v >> (8 * i)) & 0xFFU);
  };
  mix_int(static_cast<std::uint64_t>(t.node_count()));
  for (auto b : code.shape) mix(b);
  for (int e : code.entry) mix_int(static_cast<std::uint64_t>(e));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace treelect

#include <algorithm>
#include <cmath>
#include <functional>

#include "treelect/generators.hpp"

namespace treelect {

namespace {

// Weak compositions of z into x parts, saturating.
long long weak_compositions(int z, int x) {
  long double r = 1;
  for (int i = 1; i <= x - 1; ++i) r = r * (z + i) / i;
  return r > 1e18L ? static_cast<long long>(1e18) : std::llround(r);
}

// The first `count` weak compositions of z into x parts, lexicographically.
std::vector<std::vector<int>> first_compositions(int z, int x, long long count) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (static_cast<long long>(out.size()) >= count) return;
    if (slots == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.push_back(v);
      rec(left - v, slots - 1);
      cur.pop_back();
      if (static_cast<long long>(out.size()) >= count) return;
    }
  };
  rec(z, x);
  return out;
}

int marker_degree_for(int y) { return static_cast<int>(std::ceil(std::pow(static_cast<double>(y), 1.5) - 1e-9)); }

}  // namespace

TemplateDims template_dims(int n, int diam, double alpha, int marker_y) {
  if (diam % 2 != 0 || diam < 2) throw Error(Errc::BadParameters, "template trees need an even diameter");
  if (!(alpha > 0 && alpha < 0.5)) throw Error(Errc::BadParameters, "need 0 < alpha < 1/2");
  TemplateDims d;
  const int half = diam / 2;
  d.k = (2 * n + diam - 1) / diam;
  d.tau = static_cast<int>(std::floor(alpha * diam));
  if (d.k < 2) throw Error(Errc::BadParameters, "need at least two paths");
  if (d.tau < 5) throw Error(Errc::BadParameters, "need floor(alpha * diam) >= 5 to space markers");
  d.fixed = (d.tau + 1) % 2 == half % 2 ? d.tau + 1 : d.tau + 2;
  d.free_nodes = half - d.fixed;
  if (d.free_nodes < 0) throw Error(Errc::BadParameters, "paths shorter than the fixed prefix");
  for (int pos = 3; pos <= half; pos += d.tau - 4) ++d.markers_per_path;
  const long long needed = static_cast<long long>(d.k) * d.markers_per_path;
  auto supply = [&](int y) { return weak_compositions(y * y, marker_degree_for(y)); };
  if (marker_y == 0) {
    marker_y = 2;
    while (supply(marker_y) < needed || marker_degree_for(marker_y) + 2 == d.k) ++marker_y;
  }
  if (marker_y < 1) throw Error(Errc::BadParameters, "marker size must be positive");
  d.marker_y = marker_y;
  d.marker_leaves = marker_y * marker_y;
  d.marker_degree = marker_degree_for(marker_y);
  d.marker_supply = supply(marker_y);
  if (d.marker_degree + 2 == d.k) throw Error(Errc::BadParameters, "marker roots would share the centre's degree");
  if (d.marker_supply < needed) {
    throw Error(Errc::MarkerExhausted, std::to_string(needed) + " markers needed, " + std::to_string(d.marker_supply) +
                                           " available");
  }
  return d;
}

TemplateTree gen_template(int n, int diam, double alpha, const std::vector<std::vector<int>>& labels, int marker_y) {
  TemplateTree out;
  out.dims = template_dims(n, diam, alpha, marker_y);
  const TemplateDims& d = out.dims;
  const int half = diam / 2;
  const int pairs = d.free_nodes / 2;
  if (static_cast<int>(labels.size()) != d.k) throw Error(Errc::BadParameters, "need one label row per path");
  for (const auto& row : labels) {
    if (static_cast<int>(row.size()) != pairs) throw Error(Errc::BadParameters, "label row has the wrong length");
    for (int b : row) {
      if (b != 0 && b != 1) throw Error(Errc::BadParameters, "labels must be 0 or 1");
    }
  }
  auto markers = first_compositions(d.marker_leaves, d.marker_degree,
                                    static_cast<long long>(d.k) * d.markers_per_path);
  std::size_t next_marker = 0;

  TreeBuilder tb;
  out.c = tb.add_node();
  for (int i = 0; i < d.k; ++i) {
    // u[j], j = 1..half: u[1] is the path end, u[half] is next to the centre.
    std::vector<Node> u(half + 1);
    for (int j = 1; j <= half; ++j) u[j] = tb.add_node();
    // Free node t (1-based from the centre) is u[half + 1 - t]; pair j covers t = 2j-1, 2j.
    auto label_of = [&](int j) { return labels[i][(half - j) / 2]; };
    auto is_free = [&](int j) { return j > d.fixed; };
    auto port_towards_centre = [&](int j) {
      if (!is_free(j)) return 0;
      const int t = half + 1 - j;
      return t % 2 == 1 ? 1 - label_of(j) : label_of(j);
    };
    auto port_towards_end = [&](int j) {
      if (!is_free(j)) return 1;
      const int t = half + 1 - j;
      return t % 2 == 1 ? label_of(j) : 1 - label_of(j);
    };
    for (int j = 1; j < half; ++j) tb.connect(u[j], port_towards_centre(j), u[j + 1], port_towards_end(j + 1));
    tb.connect(u[half], port_towards_centre(half), out.c, i);
    for (int pos = 3; pos <= half; pos += d.tau - 4) {
      const auto& parts = markers[next_marker++];
      for (int a = 0; a < d.marker_degree; ++a) {
        Node child = tb.grow(u[pos], 2 + a, 0);
        for (int b = 0; b < parts[a]; ++b) tb.grow(child, b + 1, 0);
      }
    }
    out.p.push_back(u[1]);
  }
  out.tree = tb.build();
  return out;
}

namespace {

// Confusion subtree of height x below `root`, whose port `parent_port` is
// already used by the edge above it. Returns the end of the long path (or -1).
Node confusion_subtree(TreeBuilder& tb, Node root, int delta, int parent_port, int x) {
  if (x == 0) return -1;
  if (x == 1) {
    for (int p = 0; p <= delta; ++p) {
      if (p != parent_port) tb.grow(root, p, 0);
    }
    return -1;
  }
  Node end = tb.grow(root, delta, 0);
  for (int e = 0; e < x - 2; ++e) end = tb.grow(end, 1, 0);
  for (int j = 0; j < delta; ++j) {
    if (j == parent_port) continue;
    Node cj = tb.grow(root, j, j);
    for (int k = 0; k < delta; ++k) {
      if (k == j) continue;
      // A leaf can only carry port 0.
      Node b = tb.grow(cj, k, x - 2 == 0 ? 0 : k);
      confusion_subtree(tb, b, delta, k, x - 2);
    }
  }
  return end;
}

}  // namespace

ConfusionTree gen_confusion(int delta, int h, const std::vector<int>& sigma) {
  if (delta < 2 || h < 3) throw Error(Errc::BadParameters, "need delta >= 2 and h >= 3");
  if (static_cast<int>(sigma.size()) != delta || sigma[0] != 0) {
    throw Error(Errc::BadParameters, "sigma must list delta values starting with 0");
  }
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < delta; ++i) {
    if (sorted[i] != i) throw Error(Errc::BadParameters, "sigma must permute 0..delta-1");
  }
  ConfusionTree out;
  TreeBuilder tb;
  out.c = tb.add_node();
  for (int i = 0; i < delta; ++i) {
    Node w = tb.grow(out.c, i, i);
    Node q = confusion_subtree(tb, w, delta, i, h - 1);
    for (int l = 0; l < delta + sigma[i] + 1; ++l) tb.grow(q, l + 1, 0);
    out.w.push_back(w);
    out.q.push_back(q);
  }
  out.tree = tb.build();
  return out;
}

long long confusion_subtree_size(int delta, int x) {
  TreeBuilder tb;
  Node top = tb.add_node();
  Node root = tb.grow(top, 0, 0);
  confusion_subtree(tb, root, delta, 0, x);
  return tb.node_count() - 1;
}

long long confusion_size_formula(int delta, int x) {
  if (x == 0) return 1;
  if (x == 1) return delta + 1;
  const long long d1 = delta - 1;
  return 1 + delta + (x - 2) + d1 * d1 * confusion_size_formula(delta, x - 2);
}

}  // namespace treelect

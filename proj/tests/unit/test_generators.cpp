#include <doctest.h>

#include <cmath>
#include <set>

#include "brute.hpp"
#include "treelect/error.hpp"
#include "treelect/generators.hpp"
#include "treelect/tree_code.hpp"
#include "treelect/view.hpp"

using namespace treelect;

TEST_CASE("paths") {
  CHECK(gen_path(2).node_count() == 3);
  for (int k = 2; k <= 10; ++k) CHECK(diameter(gen_path(k)) == k);
  CHECK(path_and_seq(gen_intro_line(), 0, 6).seq == PortSeq{0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0});
}

TEST_CASE("random trees") {
  CHECK(gen_random(1, 5).node_count() == 1);
  CHECK(canonical_code(gen_random(30, 8)) == canonical_code(gen_random(30, 8)));
  int symmetric = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    PortTree t = gen_random(30, seed);
    CHECK_FALSE(validate(t.raw()).has_value());
    symmetric += is_symmetric(t) ? 1 : 0;
  }
  MESSAGE("symmetric among 1000 random 30-node trees: " << symmetric);
  CHECK(symmetric < 100);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int d = 2 + static_cast<int>(seed % 15);
    PortTree t = gen_random_diameter(d + 1 + static_cast<int>(seed % 40), d, seed);
    CHECK(brute::diameter(t) == d);
  }
}

TEST_CASE("composition ranking") {
  CHECK(unrank_composition(1, 3) == std::vector<int>{1, 1, 1});
  for (int parts = 1; parts <= 4; ++parts) {
    std::set<std::vector<int>> seen;
    int last_sum = 0;
    for (std::uint64_t r = 1; r <= 200; ++r) {
      auto c = unrank_composition(r, parts);
      CHECK(rank_composition(c) == r);
      int sum = 0;
      for (int v : c) {
        CHECK(v >= 1);
        sum += v;
      }
      CHECK(sum >= last_sum);
      last_sum = sum;
      CHECK(seen.insert(c).second);
    }
  }
}

TEST_CASE("double brooms") {
  DoubleBroom db = gen_double_broom(2, 1, 2, 7);
  CHECK(brute::diameter(db.tree) == 7);
  CHECK(db.tree.node_count() == double_broom_size(2, 7));
  Centre c = centre(db.tree);
  REQUIRE(c.is_edge());
  // Centre is the middle edge of the handle.
  auto handle = path_and_seq(db.tree, db.va, db.vb);
  CHECK(handle.nodes.size() == 4);
  PortSeq pal = handle.seq;
  std::reverse(pal.begin(), pal.end());
  CHECK(pal == handle.seq);
  CHECK(handle.seq.front() == 0);
  CHECK(((c.a == handle.nodes[1] && *c.b == handle.nodes[2]) || (c.a == handle.nodes[2] && *c.b == handle.nodes[1])));

  // Both handle ends are visible from every node at radius D-2.
  DoubleBroom d3 = gen_double_broom(3, 2, 5, 9);
  auto dist = brute::all_distances(d3.tree);
  for (Node v = 0; v < d3.tree.node_count(); ++v) {
    CHECK(dist[v][d3.va] <= 7);
    CHECK(dist[v][d3.vb] <= 7);
  }

  std::set<TreeCode> codes;
  int count = 0;
  for (std::uint64_t a = 1; a <= 4; ++a) {
    for (std::uint64_t b = a + 1; b <= 4; ++b) {
      codes.insert(canonical_code(gen_double_broom(2, a, b, 7).tree));
      ++count;
    }
  }
  CHECK(static_cast<int>(codes.size()) == count);
  CHECK_THROWS_AS(gen_double_broom(2, 2, 2, 7), Error);
  CHECK_THROWS_AS(gen_double_broom(2, 1, 2, 8), Error);
}

TEST_CASE("G sigma, odd diameter") {
  GSigma g = gen_gsigma_odd(28, 7, {2, 3});
  CHECK(g.k == 4);
  CHECK(brute::diameter(g.tree) == 7);
  // Swapped gadgets put the extra leaf on the c0 side.
  for (int i = 1; i <= 4; ++i) {
    const bool swapped = i == 2 || i == 3;
    Node mid_p = g.tree.link(g.p[i], 1).node;
    Node mid_q = g.tree.link(g.q[i], 1).node;
    CHECK(g.tree.degree(mid_p) == (swapped ? 3 : 2));
    CHECK(g.tree.degree(mid_q) == (swapped ? 2 : 3));
    CHECK(path_and_seq(g.tree, g.q[i], g.q_leaf[i]).seq == PortSeq{1, 0, 1, 0});
  }
  for (int i = 2; i <= 4; ++i) {
    CHECK(views_equal(extract_view(g.core, g.p[i], 2), extract_view(g.core, g.q[i], 2)));
  }
  CHECK_FALSE(views_equal(extract_view(g.tree, g.p[2], 3), extract_view(g.tree, g.q[2], 3)));
  CHECK_THROWS_AS(gen_gsigma_odd(28, 7, {1}), Error);
}

TEST_CASE("G sigma, even diameter") {
  GSigma g = gen_gsigma_even(40, 8, {});
  CHECK(brute::diameter(g.tree) == 8);
  for (int i = 2; i <= g.k; ++i) {
    CHECK(views_equal(extract_view(g.core, g.p[i], 2), extract_view(g.core, g.q[i], 2)));
  }
}

TEST_CASE("template trees") {
  const int n = 60;
  const int d = 24;
  const double alpha = 0.25;
  TemplateDims dims = template_dims(n, d, alpha);
  CHECK(dims.tau == 6);
  CHECK(dims.k == 5);
  CHECK((dims.fixed == dims.tau + 1 || dims.fixed == dims.tau + 2));
  CHECK(dims.free_nodes % 2 == 0);
  CHECK(dims.free_nodes == d / 2 - dims.fixed);
  CHECK(dims.free_edges() == dims.k * dims.free_nodes / 2);

  const int pairs = dims.free_nodes / 2;
  std::vector<std::vector<int>> zero(dims.k, std::vector<int>(pairs, 0));
  std::vector<std::vector<int>> one = zero;
  one[1][0] = 1;
  TemplateTree a = gen_template(n, d, alpha, zero);
  TemplateTree b = gen_template(n, d, alpha, one);
  CHECK(brute::diameter(a.tree) == d);
  CHECK(a.tree.node_count() == b.tree.node_count());
  CHECK(canonical_code(a.tree) != canonical_code(b.tree));

  // Ports differ only on the edges of the flipped pair.
  int diff = 0;
  for (Node v = 0; v < a.tree.node_count(); ++v) {
    for (int p = 0; p < a.tree.degree(v); ++p) diff += a.tree.link(v, p) == b.tree.link(v, p) ? 0 : 1;
  }
  CHECK(diff > 0);
  CHECK(diff <= 6);

  // The first 2f-1 ports from each path end towards the centre are fixed, so
  // the path ends see the same radius-tau views under every labelling.
  for (int i = 0; i < dims.k; ++i) {
    PortSeq s = path_and_seq(a.tree, a.p[i], a.c).seq;
    for (int t = 0; t < 2 * dims.fixed - 1; ++t) CHECK(s[t] == (t % 2 == 0 ? 0 : 1));
    CHECK(views_equal(extract_view(a.tree, a.p[i], dims.tau), extract_view(b.tree, b.p[i], dims.tau)));
  }
  CHECK_THROWS_AS(template_dims(n, 23, alpha), Error);
}

TEST_CASE("confusion trees") {
  for (int delta : {2, 3}) {
    for (int x = 0; x <= 5; ++x) {
      const long long size = confusion_subtree_size(delta, x);
      CHECK(size == confusion_size_formula(delta, x));
      CHECK(size <= 3 * static_cast<long long>(std::pow(delta, x)));
    }
  }
  const std::vector<int> sigma{0, 2, 1};
  ConfusionTree c = gen_confusion(3, 4, sigma);
  CHECK(brute::diameter(c.tree) == 8);
  CHECK(c.tree.degree(c.c) == 3);
  for (Node w : c.w) CHECK(c.tree.degree(w) == 4);
  for (int i = 0; i < 3; ++i) CHECK(c.tree.degree(c.q[i]) == 1 + 3 + sigma[i] + 1);
  CHECK_THROWS_AS(gen_confusion(3, 4, {1, 0, 2}), Error);
}

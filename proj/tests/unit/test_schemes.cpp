#include <doctest.h>

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "treelect/error.hpp"
#include "treelect/generators.hpp"
#include "treelect/oracles.hpp"
#include "treelect/schemes.hpp"
#include "treelect/tree_code.hpp"

using namespace treelect;

namespace {

PortTree double_star(int left, int right) {
  TreeBuilder b;
  Node c0 = b.add_node();
  Node c1 = b.grow(c0, 0, 0);
  for (int i = 0; i < left; ++i) b.grow(c0, i + 1, 0);
  for (int i = 0; i < right; ++i) b.grow(c1, i + 1, 0);
  return b.build();
}

// Separated property straight from its definition, with brute-force gateways.
bool separated_by_definition(const PortTree& t, Node c0, Node c1) {
  const int d = brute::diameter(t);
  for (Node v = 0; v < t.node_count(); ++v) {
    auto paths = brute::endless_paths(t, v, d - 2);
    if (paths.empty()) continue;
    std::size_t common = 0;
    while (common < paths[0].size() &&
           std::all_of(paths.begin(), paths.end(), [&](const auto& p) { return p[common] == paths[0][common]; })) {
      ++common;
    }
    std::vector<Node> to_gateway(paths[0].begin(), paths[0].begin() + static_cast<long>(common));
    const bool has0 = std::find(to_gateway.begin(), to_gateway.end(), c0) != to_gateway.end();
    const bool has1 = std::find(to_gateway.begin(), to_gateway.end(), c1) != to_gateway.end();
    if (!(has0 && has1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("full view scheme") {
  AdviceScheme s = full_view_scheme();
  ElectionOutcome one = run_scheme(PortTree(), s, 0);
  CHECK(one.success());
  CHECK(one.outputs[0].empty());

  PortTree p = path_from_seq({0, 0, 1, 0});
  ElectionOutcome o = run_scheme(p, s, 2);
  CHECK(o.success());
  CHECK(o.advice_bits() == 0);

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    PortTree t = gen_random(3 + static_cast<int>(seed % 25), seed);
    if (is_symmetric(t)) continue;
    const int d = diameter(t);
    ElectionOutcome a = run_scheme(t, s, d);
    REQUIRE(a.success());
    CHECK(*a.leader == feasibility_at(t, d)->leader);
  }
  CHECK_THROWS_AS(run_scheme(path_from_seq({0, 0}), s, 1), Error);
}

TEST_CASE("diam-1 scheme") {
  AdviceScheme s = diam_minus_one_scheme();
  for (int k = 3; k <= 8; ++k) {
    ElectionOutcome o = run_scheme(gen_path(k), s, k - 1);
    CHECK(o.success());
  }
  PortTree d3 = path_from_seq({0, 0, 1, 0, 1, 0});
  CHECK(run_scheme(d3, s, 2).advice_bits() == 3);

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    PortTree t = gen_random(3 + static_cast<int>(seed % 25), seed);
    if (is_symmetric(t)) continue;
    const int d = diameter(t);
    ElectionOutcome a = run_scheme(t, s, d - 1);
    REQUIRE(a.success());
    CHECK(a.leader == run_scheme(t, full_view_scheme(), d).leader);
  }
}

TEST_CASE("even elect") {
  AdviceScheme s = even_elect_scheme();
  TreeBuilder b;
  Node c = b.add_node();
  for (int leg = 0; leg < 3; ++leg) b.grow(b.grow(c, leg, 0), 1, 0);
  PortTree spider = b.build();
  ElectionOutcome o = run_scheme(spider, s, 2);
  REQUIRE(o.success());
  CHECK(*o.leader == c);

  TreeBuilder sb;
  Node sc = sb.add_node();
  for (int p = 0; p < 4; ++p) sb.grow(sc, p, 0);
  PortTree star = sb.build();
  ElectionOutcome so = run_scheme(star, s, 0);
  REQUIRE(so.success());
  CHECK(*so.leader == sc);
  CHECK(so.outputs[sc].empty());
  CHECK(so.outputs[1] == PortSeq{0});

  int runs = 0;
  for (std::uint64_t seed = 1; runs < 100; ++seed) {
    const int d = 6 + 2 * static_cast<int>(seed % 5);
    PortTree t = gen_random_diameter(d + 1 + static_cast<int>(seed % (60 - d)), d, seed);
    ++runs;
    ElectionOutcome r = run_scheme(t, s, d - 2);
    REQUIRE(r.success());
    CHECK(*r.leader == centre(t).a);
    CHECK(r.advice_bits() == gamma_length(d));
  }
  CHECK_THROWS_AS(run_scheme(gen_path(5), s, 3), Error);
}

TEST_CASE("odd advice construction") {
  // Double star: c0 with two extra leaves, c1 with one.
  PortTree t = double_star(2, 1);
  OddLists lists = odd_lists(t);
  CHECK(lists.l0 != lists.l1);
  CHECK(std::is_sorted(lists.l0.begin(), lists.l0.end()));
  OddAdvice a = odd_advice_build(t);
  CHECK(a.diameter == 3);
  CHECK(a.j >= 1);
  CHECK(decode_odd_advice(encode_odd_advice(a)).j == a.j);
  // m is the next port of the j-th entry of the chosen list and differs from
  // the other list's j-th entry at that position.
  bool found = false;
  for (int side = 0; side < 2; ++side) {
    const auto& l = side == 0 ? lists.l0 : lists.l1;
    const auto& other = side == 0 ? lists.l1 : lists.l0;
    if (static_cast<int>(l.size()) < a.j) continue;
    const PortSeq& s = l[a.j - 1];
    if (static_cast<int>(s.size()) <= a.k || s[a.k] != a.m) continue;
    if (std::binary_search(other.begin(), other.end(), s)) continue;
    found = true;
    if (static_cast<int>(other.size()) >= a.j) {
      const PortSeq& o = other[a.j - 1];
      CHECK(std::equal(s.begin(), s.begin() + a.k, o.begin(), o.begin() + std::min<long>(a.k, o.size())));
      CHECK((static_cast<int>(o.size()) <= a.k || o[a.k] != a.m));
    }
  }
  CHECK(found);

  try {
    odd_advice_build(double_star(2, 2));
    FAIL("symmetric double star must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ListsEqual);
  }
  CHECK_THROWS_AS(odd_advice_build(gen_path(4)), Error);
}

TEST_CASE("separated bit follows its definition") {
  DoubleBroom db = gen_double_broom(2, 1, 2, 7);
  OddLists lists = odd_lists(db.tree);
  CHECK(lists.separated == separated_by_definition(db.tree, lists.c0, lists.c1));
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int d = 5 + 2 * static_cast<int>(seed % 3);
    PortTree t = gen_random_diameter(d + 1 + static_cast<int>(seed % 20), d, seed);
    OddLists l = odd_lists(t);
    CHECK(l.separated == separated_by_definition(t, l.c0, l.c1));
  }
}

TEST_CASE("odd elect") {
  AdviceScheme s = odd_elect_scheme();
  PortTree ds = double_star(2, 1);
  ElectionOutcome o = run_scheme(ds, s, 1);
  REQUIRE(o.success());
  Centre c = centre(ds);
  CHECK((*o.leader == c.a || *o.leader == *c.b));

  for (std::uint64_t a = 1; a < 8; ++a) {
    for (std::uint64_t b = a + 1; b <= 8; b += 3) {
      PortTree t = gen_double_broom(3, a, b, 9).tree;
      ElectionOutcome r = run_scheme(t, s, 7);
      CHECK(r.success());
    }
  }

  int runs = 0;
  for (std::uint64_t seed = 1; runs < 60; ++seed) {
    const int d = 5 + 2 * static_cast<int>(seed % 3);
    PortTree t = gen_random_diameter(d + 1 + static_cast<int>(seed % 30), d, seed);
    FeasibilityResult f = xi(t);
    if (!f.xi || *f.xi > d - 2) continue;
    ++runs;
    ElectionOutcome r = run_scheme(t, s, d - 2);
    REQUIRE(r.success());
    Centre ct = centre(t);
    CHECK((*r.leader == ct.a || *r.leader == *ct.b));
  }
}

TEST_CASE("compute_reps") {
  TreeBuilder b;
  Node c = b.add_node();
  for (int p = 0; p < 4; ++p) b.grow(c, p, 0);
  CHECK(compute_reps(b.build(), c, 3).empty());

  PortTree p10 = gen_path(10);
  auto reps = compute_reps(p10, 0, 3);
  REQUIRE(reps.size() == 1);
  CHECK(distances_from(p10, 0)[reps[0]] == 8);

  // Every deep leaf is below exactly one representative, at distance eps-1.
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    PortTree t = gen_random(40, seed);
    const Node root = centre(t).a;
    const int eps = 2 + static_cast<int>(seed % 3);
    auto rs = compute_reps(t, root, eps);
    Rooting r = root_at(t, root);
    for (Node x : rs) CHECK(r.depth[x] >= 0);
    for (Node leaf = 0; leaf < t.node_count(); ++leaf) {
      if (leaf == root || t.degree(leaf) != 1 || r.depth[leaf] < eps - 1) continue;
      int covering = 0;
      for (Node x : rs) {
        Node y = leaf;
        while (y != x && y != root) y = r.parent[y];
        if (y == x) ++covering;
      }
      CHECK(covering >= 1);
    }
    // A later representative never lies below an earlier one.
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        Node y = rs[j];
        while (y != root && y != rs[i]) y = r.parent[y];
        CHECK(y != rs[i]);
      }
    }
  }
}

TEST_CASE("trie scheme") {
  AdviceScheme s = trie_scheme(0.7);
  int runs = 0;
  for (std::uint64_t seed = 1; runs < 25 && seed < 2000; ++seed) {
    PortTree t = gen_random_diameter(20 + static_cast<int>(seed % 40), 10, seed);
    if (s.check(t, 7)) continue;
    ++runs;
    ElectionOutcome o = run_scheme(t, s, 7);
    REQUIRE(o.success());
    CHECK(*o.leader == centre(t).a);

    TrieAdvice a = decode_trie_advice(o.advice);
    CHECK(a.diameter == 10);
    CHECK(a.tau == 7);
    const int eps = eps_floor(10, 7);
    CHECK(eps == 2);
    auto reps = compute_reps(t, trie_root(t), eps);
    CHECK(a.trie.node_count() <= 2 * static_cast<int>(reps.size()));
    CHECK(a.trie.leaf_count() <= static_cast<int>(reps.size()));
    for (Node v = 0; v < t.node_count(); ++v) {
      View view = extract_view(t, v, 7);
      if (classify_paths(view).endless.empty()) continue;
      const int rep = find_representative(view, eps);
      Node real = *follow(t, v, view.ports_from_root(rep));
      CHECK(std::find(reps.begin(), reps.end(), real) != reps.end());
      // The representative's radius-5 view fits in the viewer's.
      CHECK(views_equal(view.subview(rep, 5), extract_view(t, real, 5)));
    }
  }
  CHECK(runs == 25);
  CHECK_THROWS_AS(trie_scheme(0.4), Error);
  CHECK(trie_scheme(0.7).check(gen_path(10), 8).has_value());
}

TEST_CASE("full code scheme") {
  AdviceScheme s = full_code_scheme();
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 2 + static_cast<int>(seed * 5 % 120);
    PortTree t = gen_random(n, seed);
    FeasibilityResult f = xi(t);
    if (!f.xi) {
      CHECK_THROWS_AS(s.oracle(t, 0), Error);
      continue;
    }
    ElectionOutcome o = run_scheme(t, s, *f.xi);
    REQUIRE(o.success());
    CHECK(o.advice_bits() <= static_cast<std::size_t>(3 * n + 16));
    if (*f.xi > 0) CHECK_THROWS_AS(run_scheme(t, s, *f.xi - 1), Error);
  }
}

TEST_CASE("scheme registry") {
  for (const auto& name : scheme_names()) CHECK(scheme_by_name(name).name == name.substr(0, name.find(':')));
  CHECK(scheme_by_name("trie:0.8").name == "trie");
  CHECK_THROWS_AS(scheme_by_name("nope"), Error);
}

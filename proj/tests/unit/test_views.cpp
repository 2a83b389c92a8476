#include <doctest.h>

#include <map>
#include <set>

#include "brute.hpp"
#include "treelect/error.hpp"
#include "treelect/generators.hpp"
#include "treelect/tree_code.hpp"
#include "treelect/view.hpp"

using namespace treelect;

TEST_CASE("radius 0 and saturated views") {
  PortTree t = gen_random(12, 4);
  View v0 = extract_view(t, 3, 0);
  CHECK(v0.node_count() == 1);
  CHECK(v0.degree(0) == t.degree(3));
  const int d = diameter(t);
  for (Node v = 0; v < t.node_count(); ++v) {
    View full = extract_view(t, v, d);
    CHECK(full.node_count() == t.node_count());
    CHECK(full.saturated());
    CHECK(classify_paths(full).endless.empty());
    CHECK(views_equal(full, extract_view(t, v, d + 3)));
    CHECK(brute::rooted_isomorphic(t, v, full.to_tree(), 0));
  }
}

TEST_CASE("views_equal agrees with a direct comparison and with canonical forms") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    PortTree t = gen_random(6 + static_cast<int>(seed % 12), seed);
    const int n = t.node_count();
    for (int r = 0; r <= diameter(t); ++r) {
      std::vector<View> views;
      for (Node v = 0; v < n; ++v) views.push_back(extract_view(t, v, r));
      for (Node u = 0; u < n; ++u) {
        for (Node v = 0; v < n; ++v) {
          const bool eq = views_equal(views[u], views[v]);
          CHECK(eq == brute::views_equal(t, u, t, v, r));
          CHECK(eq == (views[u].canonical_form() == views[v].canonical_form()));
        }
      }
    }
  }
}

TEST_CASE("views do not depend on node indices") {
  PortTree t = gen_random(15, 9);
  std::vector<Node> perm(15);
  for (int i = 0; i < 15; ++i) perm[i] = (i * 7 + 3) % 15;
  PortTree u = t.relabeled(perm);
  for (Node v = 0; v < 15; ++v) {
    for (int r = 0; r < 5; ++r) CHECK(views_equal(extract_view(t, v, r), extract_view(u, perm[v], r)));
  }
}

TEST_CASE("views grow monotonically with the radius") {
  PortTree t = gen_random(25, 2);
  for (Node v = 0; v < 25; v += 4) {
    for (int r = 0; r < diameter(t); ++r) {
      View big = extract_view(t, v, r + 1);
      CHECK(views_equal(big.subview(0, r), extract_view(t, v, r)));
    }
  }
}

TEST_CASE("endless and terminated paths") {
  // Leaf of a length-2 path sees the whole tree at radius 2.
  PortTree p2 = gen_path(2);
  CHECK(classify_paths(extract_view(p2, 0, 2)).endless.empty());

  // Centre of a long path sees exactly two endless paths.
  PortTree p10 = gen_path(10);
  for (int r = 1; r < 5; ++r) {
    PathClasses pc = classify_paths(extract_view(p10, 5, r));
    CHECK(pc.endless.size() == 2);
    CHECK(pc.terminated.empty());
  }
  // Path end: terminated at itself, one endless path.
  PathClasses end = classify_paths(extract_view(p10, 0, 3));
  CHECK(end.endless.size() == 1);
  CHECK(end.terminated.size() == 1);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PortTree t = gen_random(30, seed);
    for (Node v = 0; v < 30; v += 3) {
      for (int r = 1; r < diameter(t); r += 2) {
        View view = extract_view(t, v, r);
        CHECK(classify_paths(view).endless.size() == brute::endless_paths(t, v, r).size());
      }
    }
  }
}

TEST_CASE("gateway is the deepest node shared by all endless paths") {
  PortTree one = gen_path(6);
  View v = extract_view(one, 0, 3);
  CHECK(v.depth(gateway(v)) == 3);
  CHECK_THROWS_AS(gateway(extract_view(one, 0, 6)), Error);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    PortTree t = gen_random(25, seed);
    for (Node x = 0; x < 25; ++x) {
      for (int r = 1; r < diameter(t); r += 2) {
        auto paths = brute::endless_paths(t, x, r);
        if (paths.empty()) continue;
        // Longest common prefix of all endless paths.
        std::size_t common = 0;
        while (common < paths[0].size() &&
               std::all_of(paths.begin(), paths.end(), [&](const auto& p) { return p[common] == paths[0][common]; })) {
          ++common;
        }
        View view = extract_view(t, x, r);
        const int g = gateway(view);
        CHECK(view.depth(g) == static_cast<int>(common) - 1);
        CHECK(follow(t, x, view.ports_from_root(g)) == std::optional<Node>(paths[0][common - 1]));
      }
    }
  }
}

TEST_CASE("gateway of an even spider leaf lies past the centre") {
  PortTree t = gen_spider({4, 4, 3, 2}, 5);
  const int d = diameter(t);
  const Node c = centre(t).a;
  for (Node v = 0; v < t.node_count(); ++v) {
    if (t.degree(v) != 1) continue;
    View view = extract_view(t, v, d - 2);
    if (classify_paths(view).endless.empty()) continue;
    Node g = *follow(t, v, view.ports_from_root(gateway(view)));
    auto path = path_and_seq(t, v, g).nodes;
    CHECK(std::find(path.begin(), path.end(), c) != path.end());
  }
}

TEST_CASE("reconstruction from radius diam-1 views") {
  for (int k = 2; k <= 9; ++k) {
    PortTree t = gen_path(k);
    PortTree back = reconstruct_tree(extract_view(t, 0, k - 1), k);
    CHECK(brute::rooted_isomorphic(t, 0, back, 0));
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    PortTree t = gen_random(2 + static_cast<int>(seed % 39), seed);
    const int d = diameter(t);
    for (Node v = 0; v < t.node_count(); ++v) {
      PortTree back = reconstruct_tree(extract_view(t, v, d - 1), d);
      CHECK(brute::rooted_isomorphic(t, v, back, 0));
    }
  }
  PortTree t = gen_path(4);
  CHECK_THROWS_AS(reconstruct_tree(extract_view(t, 0, 2), 4), Error);
}

TEST_CASE("view signatures are prefix-free and separate views") {
  PortTree t = gen_random(30, 11);
  for (int r = 1; r <= 4; ++r) {
    std::map<BitString, std::vector<int>> by_sig;
    std::vector<BitString> sigs;
    for (Node v = 0; v < 30; ++v) {
      View view = extract_view(t, v, r);
      sigs.push_back(view_signature(view));
      auto [it, fresh] = by_sig.emplace(sigs.back(), view.canonical_form());
      if (!fresh) CHECK(it->second == view.canonical_form());
    }
    for (const auto& a : sigs) {
      for (const auto& b : sigs) {
        if (a.size() < b.size()) {
          bool prefix = true;
          for (std::size_t i = 0; i < a.size() && prefix; ++i) prefix = a[i] == b[i];
          CHECK_FALSE(prefix);
        }
      }
    }
  }
}

TEST_CASE("format_view carries the annotation block") {
  std::string s = format_view(extract_view(gen_path(5), 0, 2));
  CHECK(s.find("radius 2") != std::string::npos);
  CHECK(s.find("root 0") != std::string::npos);
  CHECK(s.find("frontier") != std::string::npos);
}

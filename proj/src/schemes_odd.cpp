#include <algorithm>

#include "scheme_util.hpp"
#include "treelect/schemes.hpp"

namespace treelect {

using detail::port_towards;
using detail::sequences_from;

OddLists odd_lists(const PortTree& t) {
  Centre ctr = centre(t);
  if (!ctr.is_edge()) throw Error(Errc::EvenDiameter, "diameter " + std::to_string(ctr.diameter));
  const int d = ctr.diameter;
  const int h = (d - 1) / 2;
  OddLists out;
  out.c0 = detail::smaller_endpoint(t, ctr.a, *ctr.b);
  out.c1 = out.c0 == ctr.a ? *ctr.b : ctr.a;

  // Separated: every node that sees endless paths at radius d-2 has its
  // gateway across the central edge.
  auto d0 = distances_from(t, out.c0);
  auto d1 = distances_from(t, out.c1);
  auto side = [&](Node x) { return d0[x] < d1[x] ? 0 : 1; };
  out.separated = true;
  for (Node v = 0; v < t.node_count() && out.separated; ++v) {
    View view = extract_view(t, v, d - 2);
    if (classify_paths(view).endless.empty()) continue;
    Node g = *follow(t, v, view.ports_from_root(gateway(view)));
    if (side(g) == side(v)) out.separated = false;
  }
  if (out.separated) {
    out.l0 = sequences_from(t, out.c0, detail::kUnbounded, true, port_towards(t, out.c0, out.c1));
    out.l1 = sequences_from(t, out.c1, detail::kUnbounded, true, port_towards(t, out.c1, out.c0));
  } else {
    out.l0 = sequences_from(t, out.c0, 2 * h - 1, true);
    out.l1 = sequences_from(t, out.c1, 2 * h - 1, true);
  }
  return out;
}

OddAdvice odd_advice_build(const PortTree& t) {
  OddLists lists = odd_lists(t);
  if (lists.l0 == lists.l1) throw Error(Errc::ListsEqual, "both central-edge endpoints produce the same list");
  const auto& l0 = lists.l0;
  const auto& l1 = lists.l1;
  std::size_t idx = 0;
  while (idx < l0.size() && idx < l1.size() && l0[idx] == l1[idx]) ++idx;
  const bool has0 = idx < l0.size();
  const bool has1 = idx < l1.size();
  const bool absent0 = has0 && !std::binary_search(l1.begin(), l1.end(), l0[idx]);
  const bool absent1 = has1 && !std::binary_search(l0.begin(), l0.end(), l1[idx]);
  const int i = absent0 ? 0 : 1;
  if (!absent0 && !absent1) throw Error(Errc::ListsEqual, "no distinguishing entry");
  const PortSeq& mine = i == 0 ? l0[idx] : l1[idx];
  const bool other_has = i == 0 ? has1 : has0;
  PortSeq empty;
  const PortSeq& theirs = other_has ? (i == 0 ? l1[idx] : l0[idx]) : empty;
  std::size_t k = 0;
  while (k < mine.size() && k < theirs.size() && mine[k] == theirs[k]) ++k;
  if (k >= mine.size()) throw Error(Errc::ListsEqual, "distinguishing entry is a prefix");

  OddAdvice a;
  a.diameter = diameter(t);
  a.separated = lists.separated;
  a.j = static_cast<int>(idx) + 1;
  a.k = static_cast<int>(k);
  a.m = mine[k];
  const Node chosen = i == 0 ? lists.c0 : lists.c1;
  const Node other = i == 0 ? lists.c1 : lists.c0;
  a.p = port_towards(t, other, chosen);
  return a;
}

BitString encode_odd_advice(const OddAdvice& a) {
  BitString b;
  put_gamma(b, static_cast<std::uint64_t>(a.diameter));
  b.push_back(a.separated);
  put_gamma(b, static_cast<std::uint64_t>(a.j));
  put_gamma(b, static_cast<std::uint64_t>(a.k) + 1);
  put_gamma(b, static_cast<std::uint64_t>(a.m) + 1);
  put_gamma(b, static_cast<std::uint64_t>(a.p) + 1);
  return b;
}

OddAdvice decode_odd_advice(const BitString& bits) {
  BitReader in(bits);
  OddAdvice a;
  a.diameter = static_cast<int>(in.get_gamma());
  a.separated = in.get();
  a.j = static_cast<int>(in.get_gamma());
  a.k = static_cast<int>(in.get_gamma()) - 1;
  a.m = static_cast<int>(in.get_gamma()) - 1;
  a.p = static_cast<int>(in.get_gamma()) - 1;
  if (!in.at_end()) throw Error(Errc::BadAdvice, "trailing bits after odd-diameter advice");
  return a;
}

namespace {

PortSeq odd_elect(const View& view, const AdviceBits& advice) {
  const OddAdvice a = decode_odd_advice(advice);
  const int d = a.diameter;
  if (d % 2 == 0) throw Error(Errc::BadAdvice, "even diameter in odd-diameter advice");
  if (view.radius() != d - 2) throw Error(Errc::RadiusMismatch, "view radius must be diameter - 2");
  const int h = (d - 1) / 2;

  // Stage 1: the candidate, and (when it is known) the central edge seen from it.
  int cand = 0;
  int edge_port = -1;
  if (classify_paths(view).endless.empty()) {
    PortTree map = view.to_tree();
    Centre c = centre(map);
    if (!c.is_edge()) throw Error(Errc::BadAdvice, "tree in view has even diameter");
    const int da = view.depth(c.a);
    const int db = view.depth(*c.b);
    cand = da < db ? c.a : *c.b;
    edge_port = port_towards(view, cand, da < db ? *c.b : c.a);
  } else {
    const int g = gateway(view);
    const int dg = view.depth(g);
    auto dist = view.distances_from(g);
    bool farther = false;
    for (int w = 0; w < view.node_count(); ++w) farther = farther || dist[w] > dg;
    const int level = farther ? h - 1 : h;
    if (level > dg) throw Error(Errc::BadAdvice, "gateway closer than the central edge");
    cand = view.ancestor_at_depth(g, level);
    if (a.separated) {
      if (level == dg) throw Error(Errc::BadAdvice, "gateway does not lie across the central edge");
      edge_port = port_towards(view, cand, view.ancestor_at_depth(g, level + 1));
    }
  }

  // Stage 2: the candidate's list.
  std::vector<PortSeq> list = a.separated ? detail::sequences_from(view, cand, detail::kUnbounded, true, edge_port)
                                          : detail::sequences_from(view, cand, 2 * h - 1, true);

  // Stage 3.
  const std::size_t j = static_cast<std::size_t>(a.j);
  const std::size_t k = static_cast<std::size_t>(a.k);
  const bool mine = j <= list.size() && list[j - 1].size() > k && list[j - 1][k] == a.m;
  PortSeq out = view.ports_from_root(cand);
  if (!mine) out.push_back(a.p);
  return out;
}

}  // namespace

AdviceScheme odd_elect_scheme() {
  AdviceScheme s;
  s.name = "odd_elect";
  s.check = [](const PortTree& t, int tau) -> std::optional<std::string> {
    const int d = diameter(t);
    if (d % 2 == 0) return "even diameter";
    if (tau != d - 2) return "needs tau = diameter - 2";
    if (is_symmetric(t)) return "symmetric tree";
    return std::nullopt;
  };
  s.oracle = [](const PortTree& t, int) { return encode_odd_advice(odd_advice_build(t)); };
  s.program = odd_elect;
  s.default_time = [](const PortTree& t) { return diameter(t) - 2; };
  return s;
}

}  // namespace treelect

#include <cmath>
#include <stdexcept>

#include "scheme_util.hpp"
#include "treelect/oracles.hpp"
#include "treelect/schemes.hpp"

namespace treelect {

using detail::elect_canonical;

namespace {

std::optional<std::string> need_asymmetric(const PortTree& t) {
  if (is_symmetric(t)) return "symmetric tree";
  return std::nullopt;
}

int read_diameter(const AdviceBits& advice) {
  BitReader in(advice);
  return static_cast<int>(in.get_gamma());
}

}  // namespace

AdviceScheme full_view_scheme() {
  AdviceScheme s;
  s.name = "full_view";
  s.check = [](const PortTree& t, int tau) -> std::optional<std::string> {
    if (auto r = need_asymmetric(t)) return r;
    if (tau < diameter(t)) return "needs tau >= diameter";
    return std::nullopt;
  };
  s.oracle = [](const PortTree&, int) { return AdviceBits{}; };
  s.program = [](const View& view, const AdviceBits&) {
    if (!view.saturated()) throw Error(Errc::IncompleteView, "view is not saturated");
    return elect_canonical(view.to_tree());
  };
  s.default_time = [](const PortTree& t) { return diameter(t); };
  return s;
}

AdviceScheme diam_minus_one_scheme() {
  AdviceScheme s;
  s.name = "diam_minus_1";
  s.check = [](const PortTree& t, int tau) -> std::optional<std::string> {
    if (auto r = need_asymmetric(t)) return r;
    const int d = diameter(t);
    if (d < 2) return "needs diameter >= 2";
    if (tau != d - 1) return "needs tau = diameter - 1";
    return std::nullopt;
  };
  s.oracle = [](const PortTree& t, int) {
    AdviceBits b;
    put_gamma(b, static_cast<std::uint64_t>(diameter(t)));
    return b;
  };
  s.program = [](const View& view, const AdviceBits& advice) {
    return elect_canonical(reconstruct_tree(view, read_diameter(advice)));
  };
  s.default_time = [](const PortTree& t) { return diameter(t) - 1; };
  return s;
}

namespace {

PortSeq even_elect(const View& view, const AdviceBits& advice) {
  const int d = read_diameter(advice);
  if (d % 2 != 0) throw Error(Errc::BadAdvice, "odd diameter in even-diameter advice");
  if (view.radius() != d - 2) throw Error(Errc::RadiusMismatch, "view radius must be diameter - 2");
  const int h = d / 2;
  if (d == 2) {
    // Radius 0: only leaves can tell they are not the centre.
    return view.degree(0) == 1 ? PortSeq{0} : PortSeq{};
  }
  PathClasses pc = classify_paths(view);
  if (pc.endless.empty()) {
    PortTree map = view.to_tree();
    Centre c = centre(map);
    if (c.is_edge()) throw Error(Errc::BadAdvice, "tree in view has odd diameter");
    return outgoing_ports(path_and_seq(map, 0, c.a).seq);
  }
  const int g = gateway(view);
  const int dg = view.depth(g);
  auto dist = view.distances_from(g);
  bool farther = false;
  for (int w = 0; w < view.node_count(); ++w) farther = farther || dist[w] > dg;
  const int level = (dg <= h - 1 || farther) ? h - 1 : h;
  if (level > dg) throw Error(Errc::BadAdvice, "gateway closer than the centre");
  return view.ports_from_root(view.ancestor_at_depth(g, level));
}

}  // namespace

AdviceScheme even_elect_scheme() {
  AdviceScheme s;
  s.name = "even_elect";
  s.check = [](const PortTree& t, int tau) -> std::optional<std::string> {
    const int d = diameter(t);
    if (d % 2 != 0) return "odd diameter";
    if (d < 2) return "needs diameter >= 2";
    if (tau != d - 2) return "needs tau = diameter - 2";
    return std::nullopt;
  };
  s.oracle = [](const PortTree& t, int) {
    const int d = diameter(t);
    if (d % 2 != 0) throw Error(Errc::OddDiameter, "diameter " + std::to_string(d));
    AdviceBits b;
    put_gamma(b, static_cast<std::uint64_t>(d));
    return b;
  };
  s.program = even_elect;
  s.default_time = [](const PortTree& t) { return diameter(t) - 2; };
  return s;
}

std::vector<std::string> scheme_names() {
  return {"full_view", "diam_minus_1", "even_elect", "odd_elect", "trie", "full_code"};
}

AdviceScheme scheme_by_name(const std::string& name) {
  if (name == "full_view") return full_view_scheme();
  if (name == "diam_minus_1") return diam_minus_one_scheme();
  if (name == "even_elect") return even_elect_scheme();
  if (name == "odd_elect") return odd_elect_scheme();
  if (name == "full_code") return full_code_scheme();
  if (name == "trie") return trie_scheme(0.7);
  if (name.rfind("trie:", 0) == 0) {
    double beta = 0;
    try {
      beta = std::stod(name.substr(5));
    } catch (const std::exception&) {
      throw Error(Errc::BadParameters, "bad trie parameter in '" + name + "'");
    }
    return trie_scheme(beta);
  }
  throw Error(Errc::BadParameters, "unknown scheme '" + name + "'");
}

ElectionOutcome run_scheme(const PortTree& t, const AdviceScheme& s, int tau) {
  if (auto why = s.check(t, tau)) throw Error(Errc::NotApplicable, s.name + ": " + *why);
  return run_election(
      t, s.program, [&](const PortTree& tree) { return s.oracle(tree, tau); }, tau);
}

}  // namespace treelect

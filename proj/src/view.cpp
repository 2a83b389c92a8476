#include "treelect/view.hpp"

#include <algorithm>
#include <sstream>

namespace treelect {

bool View::complete(int x) const {
  const auto& links = slots_[x].links;
  return std::all_of(links.begin(), links.end(), [](const auto& l) { return l.has_value(); });
}

bool View::saturated() const {
  for (int x = 0; x < node_count(); ++x) {
    if (!complete(x)) return false;
  }
  return true;
}

std::vector<int> View::children(int x) const {
  std::vector<int> out;
  for (int p = 0; p < degree(x); ++p) {
    if (p != up_port(x) && slots_[x].links[p]) out.push_back(slots_[x].links[p]->node);
  }
  return out;
}

int View::ancestor_at_depth(int x, int d) const {
  if (d < 0 || d > depth(x)) throw Error(Errc::BadParameters, "no ancestor at depth " + std::to_string(d));
  while (depth(x) > d) x = parent(x);
  return x;
}

PortSeq View::seq_from_root(int x) const {
  PortSeq rev;
  while (x != 0) {
    const int up = parent(x);
    rev.push_back(up_port(x));
    rev.push_back(slots_[x].links[up_port(x)]->port);
    x = up;
  }
  return PortSeq(rev.rbegin(), rev.rend());
}

std::vector<int> View::distances_from(int x) const {
  std::vector<int> dist(node_count(), -1);
  std::vector<int> queue{x};
  dist[x] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int y = queue[i];
    for (const auto& l : slots_[y].links) {
      if (l && dist[l->node] < 0) {
        dist[l->node] = dist[y] + 1;
        queue.push_back(l->node);
      }
    }
  }
  return dist;
}

PortTree View::to_tree() const {
  if (!saturated()) throw Error(Errc::IncompleteView, "view does not cover the whole tree");
  TreeBuilder b;
  for (int x = 0; x < node_count(); ++x) b.add_node();
  for (int x = 1; x < node_count(); ++x) {
    const Link up = *slots_[x].links[up_port(x)];
    b.connect(up.node, up.port, x, up_port(x));
  }
  return b.build();
}

View View::with_root(int degree, int radius) {
  View v;
  v.radius_ = radius;
  v.slots_.push_back(Slot{degree, 0, -1, -1, {}});
  v.slots_[0].links.resize(degree);
  return v;
}

int View::add_child(int parent, Port parent_port, Port child_port, int child_degree) {
  const int y = node_count();
  Slot s{child_degree, slots_[parent].depth + 1, parent, child_port, {}};
  s.links.resize(child_degree);
  s.links[child_port] = Link{parent, parent_port};
  slots_.push_back(std::move(s));
  slots_[parent].links[parent_port] = Link{y, child_port};
  return y;
}

View View::subview(int x, int r) const { return extract_ball(*this, x, r); }

namespace {

void encode(const View& v, int x, std::vector<int>& out) {
  out.push_back(v.degree(x));
  for (int p = 0; p < v.degree(x); ++p) {
    if (p == v.up_port(x)) {
      out.push_back(-1);
    } else if (auto l = v.find_link(x, p)) {
      out.push_back(l->port);
      encode(v, l->node, out);
    } else {
      out.push_back(-2);
    }
  }
}

void shape_bits(const View& v, int x, BitString& out) {
  for (int c : v.children(x)) {
    out.push_back(false);
    shape_bits(v, c, out);
    out.push_back(true);
  }
}

void label_bits(const View& v, int x, BitString& out) {
  put_gamma(out, static_cast<std::uint64_t>(v.degree(x)) + 1);
  if (x != 0) put_gamma(out, static_cast<std::uint64_t>(v.up_port(x)) + 1);
  for (int c : v.children(x)) label_bits(v, c, out);
}

}  // namespace

std::vector<int> View::canonical_form() const {
  std::vector<int> out;
  out.reserve(3 * slots_.size());
  encode(*this, 0, out);
  return out;
}

View extract_view(const PortTree& t, Node v, int r) {
  if (r < 0) throw Error(Errc::BadParameters, "negative radius");
  return extract_ball(t, v, r);
}

bool views_equal(const View& a, const View& b) { return a.canonical_form() == b.canonical_form(); }

PathClasses classify_paths(const View& view) {
  PathClasses out;
  for (int x = 0; x < view.node_count(); ++x) {
    if (view.degree(x) == 1) out.terminated.push_back(x);
    if (view.depth(x) == view.radius() && view.degree(x) >= 2) out.endless.push_back(x);
  }
  return out;
}

int gateway(const View& view) {
  PathClasses pc = classify_paths(view);
  if (pc.endless.empty()) throw Error(Errc::NoEndlessPaths, "view has no endless paths");
  std::vector<int> count(view.node_count(), 0);
  for (int x : pc.endless) count[x] = 1;
  for (int x = view.node_count() - 1; x > 0; --x) count[view.parent(x)] += count[x];
  const int total = static_cast<int>(pc.endless.size());
  int best = 0;
  for (int x = 0; x < view.node_count(); ++x) {
    if (count[x] == total && view.depth(x) > view.depth(best)) best = x;
  }
  return best;
}

PortTree reconstruct_tree(const View& view, int diam) {
  if (view.radius() != diam - 1) {
    throw Error(Errc::RadiusMismatch, "view radius " + std::to_string(view.radius()) + " but diameter " +
                                          std::to_string(diam));
  }
  TreeBuilder b;
  for (int x = 0; x < view.node_count(); ++x) b.add_node();
  for (int x = 1; x < view.node_count(); ++x) {
    const Link up = *view.find_link(x, view.up_port(x));
    b.connect(up.node, up.port, x, view.up_port(x));
  }
  for (int x = 0; x < view.node_count(); ++x) {
    for (int p = 0; p < view.degree(x); ++p) {
      if (!view.find_link(x, p)) b.grow(x, p, 0);
    }
  }
  return b.build();
}

BitString view_signature(const View& view) {
  BitString out;
  shape_bits(view, 0, out);
  out.push_back(true);  // a climb above the root ends the shape
  label_bits(view, 0, out);
  return out;
}

std::string format_view(const View& view) {
  std::ostringstream out;
  out << "tree " << view.node_count() << '\n';
  for (int x = 0; x < view.node_count(); ++x) {
    bool first = true;
    for (int p = 0; p < view.degree(x); ++p) {
      if (auto l = view.find_link(x, p)) {
        out << (first ? "" : " ") << p << ':' << l->node << ':' << l->port;
        first = false;
      }
    }
    out << '\n';
  }
  out << "radius " << view.radius() << '\n' << "root 0\n" << "frontier";
  for (int x = 0; x < view.node_count(); ++x) {
    if (!view.complete(x)) out << ' ' << x << ':' << view.degree(x);
  }
  out << '\n';
  return out.str();
}

}  // namespace treelect

#include "treelect/oracles.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "treelect/tree_code.hpp"

namespace treelect {

namespace {

class Interner {
 public:
  int id(const std::vector<int>& key) {
    auto [it, inserted] = ids_.emplace(key, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::map<std::vector<int>, int> ids_;
};

std::vector<int> densify(const std::vector<int>& ids) {
  std::unordered_map<int, int> dense;
  std::vector<int> out(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out[i] = dense.emplace(ids[i], static_cast<int>(dense.size())).first->second;
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> view_classes(const PortTree& t, int max_radius) {
  const int n = t.node_count();
  std::vector<int> offset(n + 1, 0);
  for (Node v = 0; v < n; ++v) offset[v + 1] = offset[v] + t.degree(v);
  // branch[e] for the directed edge leaving v on port p (e = offset[v] + p):
  // what is known about the far side after k more levels.
  Interner in;
  std::vector<int> branch(offset[n]);
  for (Node v = 0; v < n; ++v) {
    for (int p = 0; p < t.degree(v); ++p) {
      Link l = t.link(v, p);
      branch[offset[v] + p] = in.id({t.degree(l.node), l.port});
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> raw(n);
  for (Node v = 0; v < n; ++v) raw[v] = in.id({-1, t.degree(v)});
  classes.push_back(densify(raw));
  for (int r = 1; r <= max_radius; ++r) {
    for (Node v = 0; v < n; ++v) {
      std::vector<int> key{-1, t.degree(v)};
      for (int p = 0; p < t.degree(v); ++p) key.push_back(branch[offset[v] + p]);
      raw[v] = in.id(key);
    }
    classes.push_back(densify(raw));
    if (r == max_radius) break;
    std::vector<int> next(branch.size());
    for (Node v = 0; v < n; ++v) {
      for (int p = 0; p < t.degree(v); ++p) {
        Link l = t.link(v, p);
        std::vector<int> key{t.degree(l.node), l.port};
        for (int q = 0; q < t.degree(l.node); ++q) {
          if (q != l.port) key.push_back(branch[offset[l.node] + q]);
        }
        next[offset[v] + p] = in.id(key);
      }
    }
    branch = std::move(next);
  }
  return classes;
}

namespace {

// Id of the outgoing-port sequence from every node to c; equal ids mean equal sequences.
std::vector<int> sequence_ids(const PortTree& t, Node c) {
  Rooting r = root_at(t, c);
  std::vector<int> id(t.node_count(), 0);
  std::map<std::pair<int, int>, int> table;
  for (Node v : r.order) {
    if (v == c) continue;
    Port up = t.link(r.parent[v], r.down_port[v]).port;
    id[v] = table.emplace(std::make_pair(up, id[r.parent[v]]), static_cast<int>(table.size()) + 1).first->second;
  }
  return id;
}

}  // namespace

std::vector<Node> feasible_leaders(const PortTree& t, const std::vector<int>& class_of) {
  const int classes = class_of.empty() ? 0 : *std::max_element(class_of.begin(), class_of.end()) + 1;
  std::vector<Node> out;
  for (Node c = 0; c < t.node_count(); ++c) {
    std::vector<int> ids = sequence_ids(t, c);
    std::vector<int> seen(classes, -1);
    bool ok = true;
    for (Node v = 0; v < t.node_count() && ok; ++v) {
      int& s = seen[class_of[v]];
      if (s < 0) {
        s = ids[v];
      } else if (s != ids[v]) {
        ok = false;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

namespace {

std::optional<Certificate> certify(const PortTree& t, int r, const std::vector<int>& class_of) {
  std::vector<Node> leaders = feasible_leaders(t, class_of);
  if (leaders.empty()) return std::nullopt;
  Node best = leaders[0];
  TreeCode best_code = rooted_code(t, best);
  for (std::size_t i = 1; i < leaders.size(); ++i) {
    TreeCode c = rooted_code(t, leaders[i]);
    if (c < best_code) {
      best_code = std::move(c);
      best = leaders[i];
    }
  }
  Certificate cert;
  cert.radius = r;
  cert.leader = best;
  cert.class_of = class_of;
  const int classes = *std::max_element(class_of.begin(), class_of.end()) + 1;
  cert.class_output.resize(classes);
  std::vector<char> done(classes, 0);
  for (Node v = 0; v < t.node_count(); ++v) {
    if (done[class_of[v]]) continue;
    done[class_of[v]] = 1;
    cert.class_output[class_of[v]] = outgoing_ports(path_and_seq(t, v, best).seq);
  }
  return cert;
}

}  // namespace

std::optional<Certificate> feasibility_at(const PortTree& t, int r) {
  const int d = diameter(t);
  auto classes = view_classes(t, std::min(r, d));
  return certify(t, r, classes.back());
}

FeasibilityResult xi(const PortTree& t) {
  const int d = diameter(t);
  auto classes = view_classes(t, d);
  FeasibilityResult res;
  for (int r = 0; r <= d; ++r) {
    const auto& cls = classes[r];
    res.class_counts.push_back(*std::max_element(cls.begin(), cls.end()) + 1);
    if (auto cert = certify(t, r, cls)) {
      res.xi = r;
      res.certificate = std::move(cert);
      break;
    }
  }
  return res;
}

std::vector<PortSeq> map_based_election(const PortTree& t, int tau) {
  if (is_symmetric(t)) throw Error(Errc::SymmetricTree, "no election is possible on a symmetric tree");
  auto cert = feasibility_at(t, tau);
  if (!cert) throw Error(Errc::TimeTooShort, "no leader is feasible at radius " + std::to_string(tau));
  std::vector<PortSeq> out(t.node_count());
  for (Node v = 0; v < t.node_count(); ++v) out[v] = cert->class_output[cert->class_of[v]];
  return out;
}

}  // namespace treelect

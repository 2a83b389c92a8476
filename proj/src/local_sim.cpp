#include "treelect/local_sim.hpp"

#include <memory>

namespace treelect {

const char* failure_name(Failure f) {
  switch (f) {
    case Failure::None: return "none";
    case Failure::InvalidPort: return "invalid_port";
    case Failure::NotSimple: return "not_simple";
    case Failure::NoCommonLeader: return "no_common_leader";
    case Failure::ProgramError: return "program_error";
  }
  return "unknown";
}

Verification verify_outcome(const PortTree& t, const std::vector<PortSeq>& outputs) {
  Verification res;
  std::vector<int> stamp(t.node_count(), -1);
  for (Node v = 0; v < t.node_count(); ++v) {
    Node at = v;
    stamp[at] = v;
    for (int p : outputs[v]) {
      if (p < 0 || p >= t.degree(at)) {
        res.failure = Failure::InvalidPort;
        res.culprit = v;
        res.detail = "node " + std::to_string(v) + " uses port " + std::to_string(p) + " at a node of degree " +
                     std::to_string(t.degree(at));
        return res;
      }
      at = t.link(at, p).node;
      if (stamp[at] == v) {
        res.failure = Failure::NotSimple;
        res.culprit = v;
        res.detail = "path of node " + std::to_string(v) + " revisits node " + std::to_string(at);
        return res;
      }
      stamp[at] = v;
    }
    if (!res.leader) {
      res.leader = at;
    } else if (*res.leader != at) {
      res.failure = Failure::NoCommonLeader;
      res.culprit = v;
      res.detail = "node " + std::to_string(v) + " ends at " + std::to_string(at) + ", node 0 at " +
                   std::to_string(*res.leader);
      res.leader.reset();
      return res;
    }
  }
  return res;
}

ElectionOutcome run_election(const PortTree& t, const NodeProgram& program, const AdviceOracle& oracle, int tau) {
  ElectionOutcome out;
  out.rounds = tau;
  out.advice = oracle(t);
  out.outputs.resize(t.node_count());
  for (Node v = 0; v < t.node_count(); ++v) {
    View view = extract_view(t, v, tau);
    try {
      out.outputs[v] = program(view, out.advice);
    } catch (const std::exception& e) {
      out.failure = Failure::ProgramError;
      out.culprit = v;
      out.detail = e.what();
      out.failed_view = std::move(view);
      return out;
    }
  }
  Verification ver = verify_outcome(t, out.outputs);
  out.leader = ver.leader;
  out.failure = ver.failure;
  out.culprit = ver.culprit;
  out.detail = ver.detail;
  if (!ver.ok()) out.failed_view = extract_view(t, ver.culprit, tau);
  return out;
}

namespace {

// What a node knows after some round: its degree and, per port, the port the
// neighbour sent on together with that neighbour's knowledge one round earlier.
struct Knowledge {
  int degree = 0;
  std::vector<std::pair<Port, std::shared_ptr<const Knowledge>>> heard;
};
using KnowledgePtr = std::shared_ptr<const Knowledge>;

void unfold(const Knowledge& k, View& view, int x, int depth, int tau) {
  if (depth >= tau) return;
  for (int p = 0; p < k.degree; ++p) {
    if (p == view.up_port(x)) continue;
    const auto& [q, nk] = k.heard[p];
    int y = view.add_child(x, p, q, nk->degree);
    unfold(*nk, view, y, depth + 1, tau);
  }
}

}  // namespace

std::vector<View> simulate_rounds(const PortTree& t, int tau) {
  const int n = t.node_count();
  std::vector<KnowledgePtr> know(n);
  for (Node v = 0; v < n; ++v) {
    auto k = std::make_shared<Knowledge>();
    k->degree = t.degree(v);
    know[v] = k;
  }
  for (int round = 1; round <= tau; ++round) {
    std::vector<KnowledgePtr> next(n);
    for (Node v = 0; v < n; ++v) {
      auto k = std::make_shared<Knowledge>();
      k->degree = t.degree(v);
      // The message arriving on port p was sent by the neighbour on port q.
      for (int p = 0; p < t.degree(v); ++p) {
        Link l = t.link(v, p);
        k->heard.emplace_back(l.port, know[l.node]);
      }
      next[v] = k;
    }
    know = std::move(next);
  }
  std::vector<View> views;
  views.reserve(n);
  for (Node v = 0; v < n; ++v) {
    View view = View::with_root(know[v]->degree, tau);
    unfold(*know[v], view, 0, 0, tau);
    views.push_back(std::move(view));
  }
  return views;
}

}  // namespace treelect

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treelect/bits.hpp"
#include "treelect/port_tree.hpp"
#include "treelect/view.hpp"

namespace treelect {

// A node's decision: a pure function of its radius-tau view and the advice.
using NodeProgram = std::function<PortSeq(const View&, const AdviceBits&)>;
using AdviceOracle = std::function<AdviceBits(const PortTree&)>;

enum class Failure {
  None,
  InvalidPort,     // some output names a port the node does not have
  NotSimple,       // some output revisits a node
  NoCommonLeader,  // outputs end at different nodes
  ProgramError,    // the program threw
};
const char* failure_name(Failure f);

struct Verification {
  std::optional<Node> leader;
  Failure failure = Failure::None;
  Node culprit = -1;
  std::string detail;
  bool ok() const { return failure == Failure::None; }
};

// Traces every output in the tree: each must be a simple path, and all must
// end at one node.
Verification verify_outcome(const PortTree& t, const std::vector<PortSeq>& outputs);

struct ElectionOutcome {
  std::vector<PortSeq> outputs;
  std::optional<Node> leader;
  Failure failure = Failure::None;
  Node culprit = -1;
  std::string detail;
  std::optional<View> failed_view;
  int rounds = 0;
  AdviceBits advice;

  bool success() const { return failure == Failure::None; }
  std::size_t advice_bits() const { return advice.size(); }
};

// Oracle errors propagate; a throwing program marks the outcome failed.
ElectionOutcome run_election(const PortTree& t, const NodeProgram& program, const AdviceOracle& oracle, int tau);

// Round-by-round full-information flooding; the knowledge of every node
// after tau rounds, unfolded into a view.
std::vector<View> simulate_rounds(const PortTree& t, int tau);

}  // namespace treelect

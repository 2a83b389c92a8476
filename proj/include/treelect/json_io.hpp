#pragma once

#include <string>

#include <json.hpp>

#include "treelect/harness.hpp"
#include "treelect/local_sim.hpp"
#include "treelect/oracles.hpp"
#include "treelect/pairbreaking.hpp"

namespace treelect {

// {outputs, leader, success, failure, detail, advice, advice_bits, tau}
nlohmann::json outcome_to_json(const ElectionOutcome& out);
// {tree, n, diam, xi, leader, class_counts}
nlohmann::json xi_to_json(const PortTree& t, const FeasibilityResult& f);

// {"schemes": [...], "generators": [...], "tau": {"rule": ..., "value": ...},
//  "xi": bool, "timing": bool, "threads": int, "output": path}
ExperimentConfig parse_config(const nlohmann::json& j);
// Errors carry the file path.
ExperimentConfig load_config(const std::string& path);
TauRule parse_tau_rule(const nlohmann::json& j);

nlohmann::json sweep_to_json(const SweepResult& r);

// {"Z": z, "pairs": [[a, b, colour], ...]}; the colour count is the largest colour used.
PairColouring colouring_from_json(const nlohmann::json& j);
nlohmann::json colouring_to_json(const PairColouring& col);
// {"Z", "colours", "B": [[bit per colour] per element]}
nlohmann::json breaker_to_json(const Breaker& b);

}  // namespace treelect

#include "treelect/json_io.hpp"

#include <fstream>

#include "treelect/tree_code.hpp"

namespace treelect {

using nlohmann::json;

json outcome_to_json(const ElectionOutcome& out) {
  json j;
  j["outputs"] = out.outputs;
  j["leader"] = out.leader ? json(*out.leader) : json(nullptr);
  j["success"] = out.success();
  j["failure"] = failure_name(out.failure);
  if (!out.success()) {
    j["culprit"] = out.culprit;
    j["detail"] = out.detail;
  }
  j["advice"] = out.advice.to_string();
  j["advice_bits"] = out.advice_bits();
  j["tau"] = out.rounds;
  return j;
}

json xi_to_json(const PortTree& t, const FeasibilityResult& f) {
  json j;
  j["tree"] = tree_hash(t);
  j["n"] = t.node_count();
  j["diam"] = diameter(t);
  j["xi"] = f.xi ? json(*f.xi) : json(nullptr);
  j["leader"] = f.certificate ? json(f.certificate->leader) : json(nullptr);
  j["class_counts"] = f.class_counts;
  return j;
}

TauRule parse_tau_rule(const json& j) {
  TauRule r;
  if (j.is_null()) return r;
  if (j.is_number_integer()) {
    r.kind = TauRule::Absolute;
    r.value = j.get<int>();
    return r;
  }
  const std::string rule = j.is_string() ? j.get<std::string>() : j.at("rule").get<std::string>();
  const double value = j.is_object() ? j.value("value", 0.0) : 0.0;
  if (rule == "default") {
    r.kind = TauRule::Default;
  } else if (rule == "absolute") {
    r.kind = TauRule::Absolute;
  } else if (rule == "diam_minus") {
    r.kind = TauRule::DiamMinus;
  } else if (rule == "alpha_floor") {
    r.kind = TauRule::AlphaFloor;
  } else if (rule == "beta_ceil") {
    r.kind = TauRule::BetaCeil;
  } else if (rule == "xi") {
    r.kind = TauRule::Xi;
  } else {
    throw Error(Errc::BadConfig, "unknown tau rule '" + rule + "'");
  }
  r.value = value;
  return r;
}

ExperimentConfig parse_config(const json& j) {
  try {
    ExperimentConfig c;
    c.schemes = j.value("schemes", std::vector<std::string>{});
    for (const auto& name : c.schemes) scheme_by_name(name);
    if (j.contains("generators")) {
      for (const auto& g : j.at("generators")) {
        if (!g.is_object() || !g.contains("kind")) throw Error(Errc::BadConfig, "generator entries need a \"kind\"");
        c.generators.push_back(g);
      }
    }
    c.tau = parse_tau_rule(j.value("tau", json(nullptr)));
    c.compute_xi = j.value("xi", false);
    c.timing = j.value("timing", false);
    c.threads = j.value("threads", 0);
    c.output = j.value("output", std::string{});
    return c;
  } catch (const json::exception& e) {
    throw Error(Errc::BadConfig, e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadConfig, path + ": cannot open");
  try {
    return parse_config(json::parse(in));
  } catch (const json::exception& e) {
    throw Error(Errc::BadConfig, path + ": " + e.what());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

json sweep_to_json(const SweepResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"tree", row.tree},
                    {"n", row.n},
                    {"diam", row.diam},
                    {"tau", row.tau},
                    {"scheme", row.scheme},
                    {"success", row.success},
                    {"leader", row.leader ? json(*row.leader) : json(nullptr)},
                    {"advice_bits", row.advice_bits},
                    {"xi", row.xi ? json(*row.xi) : json(nullptr)}});
  }
  json skipped = json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back({{"tree", s.tree},
                       {"source", s.source},
                       {"scheme", s.scheme},
                       {"tau", s.tau ? json(*s.tau) : json(nullptr)},
                       {"reason", s.reason}});
  }
  return {{"rows", rows}, {"skipped", skipped}};
}

PairColouring colouring_from_json(const json& j) {
  try {
    const int z = j.at("Z").get<int>();
    int colours = 1;
    for (const auto& p : j.at("pairs")) colours = std::max(colours, p.at(2).get<int>());
    PairColouring col(z, colours);
    for (const auto& p : j.at("pairs")) col.set(p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>());
    if (!col.total()) throw Error(Errc::BadConfig, "colouring must cover every pair");
    return col;
  } catch (const json::exception& e) {
    throw Error(Errc::BadConfig, std::string("colouring: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::BadParameters) throw Error(Errc::BadConfig, e.detail());
    throw;
  }
}

json colouring_to_json(const PairColouring& col) {
  json pairs = json::array();
  for (int b = 2; b <= col.z(); ++b) {
    for (int a = 1; a < b; ++a) pairs.push_back({a, b, col.at(a, b)});
  }
  return {{"Z", col.z()}, {"pairs", pairs}};
}

json breaker_to_json(const Breaker& b) {
  json rows = json::array();
  for (int a = 1; a <= b.z; ++a) {
    json row = json::array();
    for (int g = 1; g <= b.colours; ++g) row.push_back(b.at(a, g));
    rows.push_back(row);
  }
  return {{"Z", b.z}, {"colours", b.colours}, {"B", rows}};
}

}  // namespace treelect

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treelect/schemes.hpp"

namespace treelect {

// How the election time is picked per tree.
struct TauRule {
  enum Kind { Default, Absolute, DiamMinus, AlphaFloor, BetaCeil, Xi };
  Kind kind = Default;
  double value = 0;

  // nullopt when the rule has no value for this tree (Xi on a symmetric tree).
  std::optional<int> resolve(const PortTree& t, const AdviceScheme& s) const;
  std::string describe() const;
};

struct CorpusTree {
  std::string source;       // generator name and parameters, or file path
  nlohmann::json params;    // the generator parameters behind this tree
  PortTree tree;
};

// One generator entry: {"kind": ..., parameters...}. Kinds: random,
// random_diameter, spider, path, intro, broom, gsigma_odd, gsigma_even,
// template, confusion, file. Random kinds take "seeds": [...] or
// "seed" + "count"; "file" takes "path", which may use * and ? in its last
// component.
std::vector<CorpusTree> generate_corpus(const nlohmann::json& spec);

struct ExperimentConfig {
  std::vector<std::string> schemes;
  std::vector<nlohmann::json> generators;
  TauRule tau;
  bool compute_xi = false;
  bool timing = false;  // fill the ms column; off keeps output byte-stable
  int threads = 0;      // 0: hardware concurrency
  std::string output;   // CSV path; empty: caller decides
};

struct ResultRow {
  std::string tree;  // tree_hash
  int n = 0;
  int diam = 0;
  int tau = 0;
  std::string scheme;
  bool success = false;
  std::optional<Node> leader;
  std::size_t advice_bits = 0;
  std::optional<int> xi;
  std::optional<double> ms;
};

struct SkipRecord {
  std::string tree;
  std::string source;
  std::string scheme;
  std::optional<int> tau;
  std::string reason;
};

struct SweepResult {
  std::vector<ResultRow> rows;        // sorted
  std::vector<SkipRecord> skipped;    // sorted
  bool all_success() const;
};

// Runs every scheme on every tree of every generator. Trees with equal
// canonical codes are run once. Rows failing verification are kept with
// success = false; inapplicable pairs are recorded as skips.
SweepResult run_sweep(const ExperimentConfig& config);
SweepResult run_sweep(const ExperimentConfig& config, const std::vector<CorpusTree>& corpus);

std::string csv_header();
std::string format_csv_row(const ResultRow& row);
std::string to_csv(const SweepResult& result);

// Distinct advice strings the scheme's oracle emits over the trees it
// applies to at the rule's time.
std::size_t distinct_advice_count(const AdviceScheme& scheme, const std::vector<PortTree>& trees, const TauRule& tau);

}  // namespace treelect

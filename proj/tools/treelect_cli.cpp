#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "treelect/generators.hpp"
#include "treelect/harness.hpp"
#include "treelect/json_io.hpp"
#include "treelect/oracles.hpp"
#include "treelect/pairbreaking.hpp"
#include "treelect/schemes.hpp"
#include "treelect/tree_code.hpp"
#include "treelect/tree_io.hpp"

using namespace treelect;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct GenerateArgs {
  std::string kind;
  int n = 0;
  int diam = 0;
  int k = 0;
  int delta = 0;
  int h = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t seed = 1;
  double alpha = 0;
  int marker_y = 0;
  std::uint64_t label_seed = 0;
  bool even = false;
  std::vector<int> sigma;
  std::vector<int> legs;
  std::string out;
};

json generator_spec(const GenerateArgs& g, const CLI::App& cmd) {
  auto given = [&](const char* opt) { return cmd.count(opt) > 0; };
  json spec;
  if (g.kind == "random") {
    spec = {{"kind", given("--diam") ? "random_diameter" : "random"}, {"n", g.n}, {"seeds", {g.seed}}};
    if (given("--diam")) spec["diam"] = g.diam;
  } else if (g.kind == "spider") {
    spec = {{"kind", "spider"}, {"legs", g.legs}, {"seeds", {g.seed}}};
  } else if (g.kind == "path") {
    spec = {{"kind", "path"}, {"k", g.k}};
  } else if (g.kind == "intro") {
    spec = {{"kind", "intro"}};
  } else if (g.kind == "broom") {
    spec = {{"kind", "broom"}, {"delta", g.delta}, {"a", g.a}, {"b", g.b}, {"diam", g.diam}};
  } else if (g.kind == "gsigma") {
    spec = {{"kind", g.even ? "gsigma_even" : "gsigma_odd"}, {"n", g.n}, {"diam", g.diam}, {"sigma", g.sigma}};
  } else if (g.kind == "template") {
    spec = {{"kind", "template"}, {"n", g.n}, {"diam", g.diam}, {"alpha", g.alpha}, {"marker_y", g.marker_y}};
    if (given("--label-seed")) spec["label_seed"] = g.label_seed;
  } else if (g.kind == "confusion") {
    spec = {{"kind", "confusion"}, {"delta", g.delta}, {"h", g.h}};
    if (given("--sigma")) spec["sigma"] = g.sigma;
  }
  return spec;
}

int cmd_generate(const GenerateArgs& g, const CLI::App& cmd) {
  CorpusTree c = generate_corpus(generator_spec(g, cmd)).at(0);
  if (g.out.empty()) {
    std::cout << "# params " << c.params.dump() << "\n" << format_tree(c.tree);
    return kOk;
  }
  write_tree_file(g.out, c.tree);
  std::ofstream side(g.out + ".json");
  side << c.params.dump(2) << "\n";
  return kOk;
}

int cmd_info(const std::string& path, bool with_xi, bool as_json) {
  PortTree t = read_tree_file(path);
  Centre c = centre(t);
  json j{{"tree", tree_hash(t)},
         {"n", t.node_count()},
         {"diam", c.diameter},
         {"centre", c.is_edge() ? json{c.a, *c.b} : json{c.a}},
         {"symmetric", is_symmetric(t)}};
  if (with_xi) {
    FeasibilityResult f = xi(t);
    j["xi"] = f.xi ? json(*f.xi) : json(nullptr);
    j["xi_leader"] = f.certificate ? json(f.certificate->leader) : json(nullptr);
    j["class_counts"] = f.class_counts;
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  for (auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << "\n";
  return kOk;
}

int cmd_elect(const std::string& path, const std::string& scheme_name, std::optional<int> time, bool as_json) {
  PortTree t = read_tree_file(path);
  AdviceScheme s = scheme_by_name(scheme_name);
  const int tau = time ? *time : s.default_time(t);
  ElectionOutcome out = run_scheme(t, s, tau);
  if (as_json) {
    std::cout << outcome_to_json(out).dump(2) << "\n";
  } else {
    std::cout << "scheme: " << s.name << "\ntau: " << tau << "\nsuccess: " << (out.success() ? "yes" : "no")
              << "\nleader: " << (out.leader ? std::to_string(*out.leader) : "-") << "\nadvice_bits: " << out.advice_bits()
              << "\n";
    if (!out.success()) std::cout << "failure: " << failure_name(out.failure) << " at node " << out.culprit << ": " << out.detail << "\n";
  }
  return out.success() ? kOk : kFailed;
}

int cmd_sweep(const std::string& config_path, std::string output, const std::string& skips_path) {
  ExperimentConfig config = load_config(config_path);
  if (output.empty()) output = config.output;
  SweepResult r = run_sweep(config);
  const std::string csv = to_csv(r);
  if (output.empty() || output == "-") {
    std::cout << csv;
  } else {
    std::ofstream(output) << csv;
  }
  if (!skips_path.empty()) std::ofstream(skips_path) << sweep_to_json(r)["skipped"].dump(2) << "\n";
  std::cerr << r.rows.size() << " rows, " << r.skipped.size() << " skipped\n";
  return r.all_success() ? kOk : kFailed;
}

int cmd_view(const std::string& path, int node, int radius) {
  PortTree t = read_tree_file(path);
  if (node < 0 || node >= t.node_count()) throw Error(Errc::BadParameters, "node out of range");
  std::cout << format_view(extract_view(t, node, radius));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leader election with advice in anonymous port-labelled trees"};
  app.require_subcommand(1);
  int status = kOk;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build a tree from one of the families");
  generate->add_option("kind", gen.kind, "path|intro|broom|gsigma|template|confusion|random|spider")
      ->required()
      ->check(CLI::IsMember({"path", "intro", "broom", "gsigma", "template", "confusion", "random", "spider"}));
  generate->add_option("--n", gen.n, "node count (random, gsigma, template)");
  generate->add_option("--diam", gen.diam, "diameter");
  generate->add_option("--k", gen.k, "path length");
  generate->add_option("--delta", gen.delta, "degree parameter (broom, confusion)");
  generate->add_option("--height", gen.h, "half diameter (confusion)");
  generate->add_option("--a", gen.a, "first broom rank");
  generate->add_option("--b", gen.b, "second broom rank");
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("--alpha", gen.alpha, "time fraction (template)");
  generate->add_option("--marker-y", gen.marker_y, "marker size (template); 0 picks the smallest");
  generate->add_option("--label-seed", gen.label_seed, "random free-edge labels (template)");
  generate->add_flag("--even", gen.even, "even-diameter variant (gsigma)");
  generate->add_option("--sigma", gen.sigma, "swapped indices (gsigma) or permutation (confusion)");
  generate->add_option("--legs", gen.legs, "leg lengths (spider)");
  generate->add_option("-o,--out", gen.out, "tree file; a .json sidecar is written next to it");
  generate->callback([&] { status = cmd_generate(gen, *generate); });

  std::string tree_path;
  bool with_xi = false;
  bool as_json = false;
  auto* info = app.add_subcommand("info", "Size, diameter, centre, symmetry and optionally xi");
  info->add_option("tree", tree_path)->required()->check(CLI::ExistingFile);
  info->add_flag("--xi", with_xi, "compute xi with the brute-force oracle");
  info->add_flag("--json", as_json);
  info->callback([&] { status = cmd_info(tree_path, with_xi, as_json); });

  std::string scheme;
  std::optional<int> time;
  auto* elect = app.add_subcommand("elect", "Run one scheme on one tree");
  elect->add_option("tree", tree_path)->required()->check(CLI::ExistingFile);
  elect->add_option("--scheme", scheme, "full_view|diam_minus_1|even_elect|odd_elect|trie[:beta]|full_code")->required();
  elect->add_option("--time", time, "election time; defaults to the scheme's own");
  elect->add_flag("--json", as_json);
  elect->callback([&] { status = cmd_elect(tree_path, scheme, time, as_json); });

  std::string config_path;
  std::string output;
  std::string skips_path;
  auto* sweep = app.add_subcommand("sweep", "Batch experiment from a JSON config, CSV out");
  sweep->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  sweep->add_option("-o,--out", output, "CSV path (overrides the config); - for stdout");
  sweep->add_option("--skips", skips_path, "write skipped instances as JSON");
  sweep->callback([&] { status = cmd_sweep(config_path, output, skips_path); });

  int z = 0;
  std::string colouring_path;
  auto* pairbreak = app.add_subcommand("pairbreak", "Pair-breaking colourings");
  pairbreak->require_subcommand(1);
  auto* minc = pairbreak->add_subcommand("min-colours", "Fewest colours admitting a breaker");
  minc->add_option("--z", z)->required()->check(CLI::Range(2, 1 << 30));
  minc->callback([&] {
    std::cout << json{{"Z", z}, {"min_colours", min_colours(z)}, {"lower_bound", colour_lower_bound(z)}}.dump() << "\n";
  });
  auto* check = pairbreak->add_subcommand("check", "Whether a colouring admits a breaker");
  check->add_option("--file", colouring_path)->required()->check(CLI::ExistingFile);
  check->callback([&] {
    std::ifstream in(colouring_path);
    PairColouring col = colouring_from_json(json::parse(in));
    auto b = exists_breaker(col);
    json j{{"Z", col.z()}, {"colours", col.colours()}, {"exists", b.has_value()}};
    if (b) j["breaker"] = breaker_to_json(*b)["B"];
    std::cout << j.dump() << "\n";
  });

  int node = 0;
  int radius = 0;
  auto* view = app.add_subcommand("view", "Print the view of one node");
  view->add_option("tree", tree_path)->required()->check(CLI::ExistingFile);
  view->add_option("--node", node)->required();
  view->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  view->callback([&] { status = cmd_view(tree_path, node, radius); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}

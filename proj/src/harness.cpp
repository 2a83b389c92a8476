#include "treelect/harness.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "treelect/generators.hpp"
#include "treelect/oracles.hpp"
#include "treelect/tree_code.hpp"
#include "treelect/tree_io.hpp"

namespace treelect {

using nlohmann::json;

std::optional<int> TauRule::resolve(const PortTree& t, const AdviceScheme& s) const {
  switch (kind) {
    case Default:
      return s.default_time(t);
    case Absolute:
      return static_cast<int>(value);
    case DiamMinus:
      return diameter(t) - static_cast<int>(value);
    case AlphaFloor:
      return static_cast<int>(std::floor(value * diameter(t) + 1e-9));
    case BetaCeil:
      return static_cast<int>(std::ceil(value * diameter(t) - 1e-9));
    case Xi:
      return xi(t).xi;
  }
  return std::nullopt;
}

std::string TauRule::describe() const {
  switch (kind) {
    case Default:
      return "default";
    case Absolute:
      return "absolute " + std::to_string(static_cast<int>(value));
    case DiamMinus:
      return "diam-" + std::to_string(static_cast<int>(value));
    case AlphaFloor:
      return "floor(" + std::to_string(value) + "*diam)";
    case BetaCeil:
      return "ceil(" + std::to_string(value) + "*diam)";
    case Xi:
      return "xi";
  }
  return "?";
}

namespace {

const json& need(const json& spec, const char* key) {
  if (!spec.contains(key)) {
    throw Error(Errc::BadConfig, "generator '" + spec.value("kind", std::string("?")) + "' needs \"" + key + "\"");
  }
  return spec.at(key);
}

std::vector<std::uint64_t> seeds_of(const json& spec) {
  if (spec.contains("seeds")) return spec.at("seeds").get<std::vector<std::uint64_t>>();
  const auto seed = spec.value("seed", std::uint64_t{1});
  const int count = spec.value("count", 1);
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(seed + static_cast<std::uint64_t>(i));
  return out;
}

CorpusTree make(const std::string& kind, json params, PortTree tree) {
  params["kind"] = kind;
  CorpusTree c;
  c.source = params.dump();
  c.params = std::move(params);
  c.tree = std::move(tree);
  return c;
}

std::vector<std::string> glob_files(const std::string& pattern) {
  namespace fs = std::filesystem;
  fs::path p(pattern);
  const std::string name = p.filename().string();
  if (name.find_first_of("*?[") == std::string::npos) return {pattern};
  fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
  if (!fs::is_directory(dir)) throw Error(Errc::BadConfig, "no such directory: " + dir.string());
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && fnmatch(name.c_str(), entry.path().filename().c_str(), 0) == 0) {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> template_labels(const json& spec, const TemplateDims& d) {
  const int pairs = d.free_nodes / 2;
  if (spec.contains("labels")) return spec.at("labels").get<std::vector<std::vector<int>>>();
  std::vector<std::vector<int>> labels(d.k, std::vector<int>(pairs, 0));
  if (spec.contains("label_seed")) {
    std::mt19937_64 rng(spec.at("label_seed").get<std::uint64_t>());
    for (auto& row : labels) {
      for (int& b : row) b = static_cast<int>(rng() >> 63);
    }
  }
  return labels;
}

std::vector<CorpusTree> generate_unchecked(const json& spec) {
  const std::string kind = need(spec, "kind").get<std::string>();
  std::vector<CorpusTree> out;
  if (kind == "random") {
    const int n = need(spec, "n").get<int>();
    for (auto s : seeds_of(spec)) out.push_back(make(kind, {{"n", n}, {"seed", s}}, gen_random(n, s)));
  } else if (kind == "random_diameter") {
    const int n = need(spec, "n").get<int>();
    const int d = need(spec, "diam").get<int>();
    for (auto s : seeds_of(spec)) {
      out.push_back(make(kind, {{"n", n}, {"diam", d}, {"seed", s}}, gen_random_diameter(n, d, s)));
    }
  } else if (kind == "spider") {
    const auto legs = need(spec, "legs").get<std::vector<int>>();
    for (auto s : seeds_of(spec)) out.push_back(make(kind, {{"legs", legs}, {"seed", s}}, gen_spider(legs, s)));
  } else if (kind == "path") {
    const int k = need(spec, "k").get<int>();
    out.push_back(make(kind, {{"k", k}}, gen_path(k)));
  } else if (kind == "intro") {
    out.push_back(make(kind, json::object(), gen_intro_line()));
  } else if (kind == "broom") {
    const int delta = need(spec, "delta").get<int>();
    const auto a = need(spec, "a").get<std::uint64_t>();
    const auto b = need(spec, "b").get<std::uint64_t>();
    const int d = need(spec, "diam").get<int>();
    out.push_back(make(kind, {{"delta", delta}, {"a", a}, {"b", b}, {"diam", d}}, gen_double_broom(delta, a, b, d).tree));
  } else if (kind == "gsigma_odd" || kind == "gsigma_even") {
    const int n = need(spec, "n").get<int>();
    const int d = need(spec, "diam").get<int>();
    const auto sigma = spec.value("sigma", std::vector<int>{});
    GSigma g = kind == "gsigma_odd" ? gen_gsigma_odd(n, d, sigma) : gen_gsigma_even(n, d, sigma);
    out.push_back(make(kind, {{"n", n}, {"diam", d}, {"sigma", sigma}}, std::move(g.tree)));
  } else if (kind == "template") {
    const int n = need(spec, "n").get<int>();
    const int d = need(spec, "diam").get<int>();
    const double alpha = need(spec, "alpha").get<double>();
    const int y = spec.value("marker_y", 0);
    const auto labels = template_labels(spec, template_dims(n, d, alpha, y));
    out.push_back(make(kind, {{"n", n}, {"diam", d}, {"alpha", alpha}, {"marker_y", y}, {"labels", labels}},
                       gen_template(n, d, alpha, labels, y).tree));
  } else if (kind == "confusion") {
    const int delta = need(spec, "delta").get<int>();
    const int h = need(spec, "h").get<int>();
    std::vector<int> sigma(delta);
    for (int i = 0; i < delta; ++i) sigma[i] = i;
    sigma = spec.value("sigma", sigma);
    out.push_back(make(kind, {{"delta", delta}, {"h", h}, {"sigma", sigma}}, gen_confusion(delta, h, sigma).tree));
  } else if (kind == "file") {
    for (const auto& path : glob_files(need(spec, "path").get<std::string>())) {
      CorpusTree c;
      c.source = path;
      c.params = {{"kind", "file"}, {"path", path}};
      c.tree = read_tree_file(path);
      out.push_back(std::move(c));
    }
  } else {
    throw Error(Errc::BadConfig, "unknown generator kind '" + kind + "'");
  }
  return out;
}

}  // namespace

std::vector<CorpusTree> generate_corpus(const json& spec) {
  try {
    return generate_unchecked(spec);
  } catch (const json::exception& e) {
    throw Error(Errc::BadConfig, "generator " + spec.dump() + ": " + e.what());
  }
}

bool SweepResult::all_success() const {
  return std::all_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.success; });
}

namespace {

template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

// One (tree, scheme) task's product: a row or a skip.
struct TaskResult {
  std::optional<ResultRow> row;
  std::optional<SkipRecord> skip;
};

}  // namespace

SweepResult run_sweep(const ExperimentConfig& config) {
  std::vector<CorpusTree> corpus;
  for (const auto& g : config.generators) {
    for (auto& c : generate_corpus(g)) corpus.push_back(std::move(c));
  }
  return run_sweep(config, corpus);
}

SweepResult run_sweep(const ExperimentConfig& config, const std::vector<CorpusTree>& corpus) {
  std::vector<AdviceScheme> schemes;
  for (const auto& name : config.schemes) schemes.push_back(scheme_by_name(name));

  // Relabelled duplicates collapse onto the first occurrence.
  std::vector<const CorpusTree*> trees;
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (const auto& c : corpus) {
    std::string id = tree_hash(c.tree);
    if (!seen.insert(id).second) continue;
    trees.push_back(&c);
    ids.push_back(std::move(id));
  }

  std::vector<std::optional<int>> xis(trees.size());
  std::vector<int> diams(trees.size());
  parallel_for(trees.size(), config.threads, [&](std::size_t i) {
    diams[i] = diameter(trees[i]->tree);
    if (config.compute_xi) xis[i] = xi(trees[i]->tree).xi;
  });

  std::vector<TaskResult> results(trees.size() * schemes.size());
  parallel_for(results.size(), config.threads, [&](std::size_t task) {
    const std::size_t ti = task / schemes.size();
    const AdviceScheme& s = schemes[task % schemes.size()];
    const PortTree& t = trees[ti]->tree;
    auto skip = [&](std::optional<int> tau, std::string reason) {
      results[task].skip = SkipRecord{ids[ti], trees[ti]->source, s.name, tau, std::move(reason)};
    };
    std::optional<int> tau;
    try {
      tau = config.tau.kind == TauRule::Xi && config.compute_xi ? xis[ti] : config.tau.resolve(t, s);
      if (!tau) return skip(tau, "no election time: tree is symmetric");
      if (auto reason = s.check(t, *tau)) return skip(tau, *reason);
      const auto start = std::chrono::steady_clock::now();
      ElectionOutcome out = run_election(t, s.program, [&](const PortTree& x) { return s.oracle(x, *tau); }, *tau);
      const auto stop = std::chrono::steady_clock::now();
      ResultRow row;
      row.tree = ids[ti];
      row.n = t.node_count();
      row.diam = diams[ti];
      row.tau = *tau;
      row.scheme = s.name;
      row.success = out.success();
      row.leader = out.leader;
      row.advice_bits = out.advice_bits();
      row.xi = xis[ti];
      if (config.timing) row.ms = std::chrono::duration<double, std::milli>(stop - start).count();
      results[task].row = std::move(row);
    } catch (const Error& e) {
      skip(tau, e.what());
    }
  });

  SweepResult out;
  for (auto& r : results) {
    if (r.row) out.rows.push_back(std::move(*r.row));
    if (r.skip) out.skipped.push_back(std::move(*r.skip));
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.tree, a.scheme, a.tau) < std::tie(b.tree, b.scheme, b.tau);
  });
  std::sort(out.skipped.begin(), out.skipped.end(), [](const SkipRecord& a, const SkipRecord& b) {
    return std::tie(a.tree, a.scheme, a.reason) < std::tie(b.tree, b.scheme, b.reason);
  });
  return out;
}

std::string csv_header() { return "tree,n,diam,tau,scheme,success,leader,advice_bits,xi,ms"; }

std::string format_csv_row(const ResultRow& r) {
  std::string s = r.tree + "," + std::to_string(r.n) + "," + std::to_string(r.diam) + "," + std::to_string(r.tau) + "," +
                  r.scheme + "," + (r.success ? "1" : "0") + ",";
  if (r.leader) s += std::to_string(*r.leader);
  s += "," + std::to_string(r.advice_bits) + ",";
  if (r.xi) s += std::to_string(*r.xi);
  s += ",";
  if (r.ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.ms);
    s += buf;
  }
  return s;
}

std::string to_csv(const SweepResult& result) {
  std::string s = csv_header() + "\n";
  for (const auto& r : result.rows) s += format_csv_row(r) + "\n";
  return s;
}

std::size_t distinct_advice_count(const AdviceScheme& scheme, const std::vector<PortTree>& trees, const TauRule& tau) {
  std::set<AdviceBits> seen;
  for (const auto& t : trees) {
    auto time = tau.resolve(t, scheme);
    if (!time || scheme.check(t, *time)) continue;
    seen.insert(scheme.oracle(t, *time));
  }
  return seen.size();
}

}  // namespace treelect

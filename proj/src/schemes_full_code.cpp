#include <map>
#include <memory>
#include <mutex>

#include "treelect/oracles.hpp"
#include "treelect/schemes.hpp"
#include "treelect/tree_code.hpp"

namespace treelect {

namespace {

AdviceBits encode_code(const TreeCode& code) {
  AdviceBits b;
  put_gamma(b, code.entry.size() + 1);
  for (auto bit : code.shape) b.push_back(bit != 0);
  std::vector<int> deg = code_degrees(code.shape);
  for (std::size_t i = 0; i < code.entry.size(); ++i) {
    put_bits(b, static_cast<std::uint64_t>(code.entry[i]), ceil_log2(deg[i + 1]));
  }
  return b;
}

TreeCode decode_code(const AdviceBits& bits) {
  BitReader in(bits);
  const auto n = in.get_gamma();
  TreeCode code;
  code.shape.resize(2 * (n - 1));
  for (auto& bit : code.shape) bit = in.get() ? 1 : 0;
  std::vector<int> deg = code_degrees(code.shape);
  for (std::size_t i = 1; i < n; ++i) code.entry.push_back(static_cast<int>(in.get_bits(ceil_log2(deg[i]))));
  if (!in.at_end()) throw Error(Errc::BadAdvice, "trailing bits after the tree code");
  return code;
}

// Output per view class of the decoded map, keyed by canonical view form.
using ClassTable = std::map<std::vector<int>, PortSeq>;

ClassTable build_table(const PortTree& map, int tau) {
  auto cert = feasibility_at(map, tau);
  if (!cert) throw Error(Errc::TimeTooShort, "no leader is feasible at radius " + std::to_string(tau));
  ClassTable table;
  for (Node u = 0; u < map.node_count(); ++u) {
    table.emplace(extract_view(map, u, tau).canonical_form(), cert->class_output[cert->class_of[u]]);
  }
  return table;
}

// Every node of one election decodes the same advice; the table is built once.
class TableCache {
 public:
  std::shared_ptr<const ClassTable> get(const AdviceBits& advice, int tau) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(advice, tau);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto table = std::make_shared<const ClassTable>(build_table(decode(decode_code(advice)), tau));
    if (cache_.size() >= 8) cache_.clear();
    cache_.emplace(std::move(key), table);
    return table;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<AdviceBits, int>, std::shared_ptr<const ClassTable>> cache_;
};

}  // namespace

AdviceScheme full_code_scheme() {
  AdviceScheme s;
  s.name = "full_code";
  s.check = [](const PortTree& t, int tau) -> std::optional<std::string> {
    FeasibilityResult f = xi(t);
    if (!f.xi) return "symmetric tree";
    if (tau < *f.xi) return "needs tau >= xi";
    return std::nullopt;
  };
  s.oracle = [](const PortTree& t, int) {
    if (is_symmetric(t)) throw Error(Errc::SymmetricTree, "no election is possible on a symmetric tree");
    return encode_code(canonical_code(t));
  };
  auto cache = std::make_shared<TableCache>();
  s.program = [cache](const View& view, const AdviceBits& advice) {
    auto table = cache->get(advice, view.radius());
    auto it = table->find(view.canonical_form());
    if (it == table->end()) throw Error(Errc::BadAdvice, "own view does not occur in the advised map");
    return it->second;
  };
  s.default_time = [](const PortTree& t) {
    FeasibilityResult f = xi(t);
    return f.xi ? *f.xi : diameter(t);
  };
  return s;
}

}  // namespace treelect

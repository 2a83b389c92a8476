#include "treelect/tree_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace treelect {

namespace {

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::BadFormat, "bad " + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

RawAdjacency parse_raw(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line);
    if (!line.empty() && line.front() == '#') continue;
    lines.push_back(line);
  }
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size() || lines[i].substr(0, 5) != "tree ") throw Error(Errc::BadFormat, "missing 'tree <n>' header");
  int n = parse_int(trim(lines[i].substr(5)), "node count");
  if (n < 1) throw Error(Errc::BadFormat, "node count must be positive");
  ++i;
  // A node of degree 0 (only in the one-node tree) may have no line at all.
  lines.resize(std::max(lines.size(), i + static_cast<std::size_t>(n)));
  RawAdjacency raw(n);
  for (int v = 0; v < n; ++v, ++i) {
    std::istringstream in{std::string(lines[i])};
    std::string tok;
    while (in >> tok) {
      auto c1 = tok.find(':');
      auto c2 = tok.find(':', c1 == std::string::npos ? c1 : c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos) throw Error(Errc::BadFormat, "bad token '" + tok + "'");
      std::string_view sv(tok);
      raw[v].push_back(PortEntry{parse_int(sv.substr(0, c1), "port"), parse_int(sv.substr(c1 + 1, c2 - c1 - 1), "node"),
                                 parse_int(sv.substr(c2 + 1), "port")});
    }
  }
  for (; i < lines.size(); ++i) {
    if (!lines[i].empty()) throw Error(Errc::BadFormat, "trailing content after node lines");
  }
  return raw;
}

PortTree parse_tree(std::string_view text) { return PortTree::from_raw(parse_raw(text)); }

std::string format_tree(const PortTree& t) {
  std::ostringstream out;
  out << "tree " << t.node_count() << '\n';
  for (Node v = 0; v < t.node_count(); ++v) {
    for (int p = 0; p < t.degree(v); ++p) {
      Link l = t.link(v, p);
      out << (p ? " " : "") << p << ':' << l.node << ':' << l.port;
    }
    out << '\n';
  }
  return out.str();
}

PortTree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadFormat, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tree(ss.str());
}

void write_tree_file(const std::string& path, const PortTree& t) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadFormat, "cannot write " + path);
  out << format_tree(t);
}

}  // namespace treelect

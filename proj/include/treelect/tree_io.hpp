#pragma once

#include <string>
#include <string_view>

#include "treelect/port_tree.hpp"

namespace treelect {

// Text format:
//   tree <n>
//   <node 0 tokens>
//   ...
// where each node line lists "p:j:q" tokens (port p leads to node j, arriving
// on port q) in increasing p. Lines starting with '#' are ignored.
RawAdjacency parse_raw(std::string_view text);
PortTree parse_tree(std::string_view text);
std::string format_tree(const PortTree& t);

PortTree read_tree_file(const std::string& path);
void write_tree_file(const std::string& path, const PortTree& t);

}  // namespace treelect

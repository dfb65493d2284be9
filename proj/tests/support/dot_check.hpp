#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ocdf::testing {

// Minimal reader for the DOT subset the renderer emits: (di)graph, nested
// subgraphs, node/edge/attr statements, ID = ID, attribute lists, quoted and
// HTML strings, comments. Ports and `strict` are accepted but ignored.
struct DotNode {
  std::string id;
  std::map<std::string, std::string> attrs;
};

struct DotEdge {
  std::string from;
  std::string to;
  std::map<std::string, std::string> attrs;
};

struct DotGraph {
  bool directed = false;
  std::string name;
  std::vector<DotNode> nodes;  // explicit node statements
  std::vector<DotEdge> edges;
  std::vector<std::string> subgraphs;
};

/// Parsed graph, or an error message "line:col: what".
std::variant<DotGraph, std::string> parse_dot(std::string_view text);

}  // namespace ocdf::testing

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocdf/model.hpp"

namespace ocdf {

/// L1: member-incident data flows. L2: L1 plus control flows. L3: everything.
enum class AbstractionLevel { L1, L2, L3 };

std::string_view to_string(AbstractionLevel level);
std::optional<AbstractionLevel> parse_level(std::string_view token);

/// Drops the flows not shown at `level`. Features are kept.
OcdfClass project(const OcdfClass& cls, AbstractionLevel level);

struct CutSuggestion {
  std::size_t first = 0;   // index into SubstructureReport::components
  std::size_t second = 0;
  std::size_t affinity = 0;        // longest shared name prefix across the pair
  std::size_t flows_required = 0;  // flows a merge into one substructure needs
};

/// Connected components of the undirected flow graph.
///
/// Components are ordered by the position of their first feature in the
/// class, and list their feature ids in class order.
struct SubstructureReport {
  std::vector<std::vector<std::string>> components;
  std::vector<CutSuggestion> cut_suggestions;
};

SubstructureReport substructures(const OcdfClass& cls);

/// A non-const member with conflicting accesses from methods that can be
/// entered through distinct interface methods. Id sets are sorted.
struct RaceHazard {
  std::string member;
  std::vector<std::string> writers;
  std::vector<std::string> readers;
  std::vector<std::string> entry_points;

  bool operator==(const RaceHazard&) const = default;
};

std::vector<RaceHazard> detect_races(const OcdfClass& cls);

}  // namespace ocdf

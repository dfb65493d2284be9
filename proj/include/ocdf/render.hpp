#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ocdf/analysis.hpp"
#include "ocdf/model.hpp"

namespace ocdf {

enum class RankDir { TopDown, LeftRight };

std::optional<RankDir> parse_rankdir(std::string_view token);

struct RenderOptions {
  AbstractionLevel level = AbstractionLevel::L3;
  bool show_inherited = true;
  RankDir rankdir = RankDir::TopDown;
};

/// Graphviz DOT for one class.
///
/// Members are boxes labeled "<vis> name : type"; methods are rounded boxes
/// showing their signature, interface methods additionally filled light
/// gray. Data flows are solid arrows, control flows dashed. Inherited
/// features get a dashed border and static ones an underlined label.
std::string render_dot(const OcdfClass& cls, const RenderOptions& opts = {});

/// Node id used for a feature id: [A-Za-z0-9_], never starting with a digit.
std::string sanitize_id(std::string_view id);

}  // namespace ocdf

#include "ocdf/render.hpp"

#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace ocdf {

std::optional<RankDir> parse_rankdir(std::string_view token) {
  if (token == "top_down" || token == "TB") return RankDir::TopDown;
  if (token == "left_right" || token == "LR") return RankDir::LeftRight;
  return std::nullopt;
}

std::string sanitize_id(std::string_view id) {
  std::string out;
  out.reserve(id.size() + 1);
  for (char c : id) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    out += ok ? c : '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out.insert(0, "_");
  // DOT keywords are case-insensitive and cannot be bare node ids.
  std::string lower;
  for (char c : out) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (std::string_view kw : {"node", "edge", "graph", "digraph", "subgraph", "strict"}) {
    if (lower == kw) return out + "_";
  }
  return out;
}

namespace {

char visibility_symbol(Visibility v) {
  switch (v) {
    case Visibility::Public: return '+';
    case Visibility::Protected: return '#';
    case Visibility::Private: return '-';
  }
  return '-';
}

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string html_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string label_text(const Feature& f) {
  std::string text(1, visibility_symbol(f.visibility));
  text += ' ';
  if (f.is_member()) {
    text += f.name + " : " + f.decl;
  } else {
    text += f.decl;
  }
  return text;
}

std::string node_attributes(const Feature& f) {
  std::string style;
  auto add_style = [&](std::string_view s) {
    if (!style.empty()) style += ',';
    style += s;
  };
  if (f.is_method()) add_style("rounded");
  if (f.kind == FeatureKind::InterfaceMethod) add_style("filled");
  if (f.inherited) add_style("dashed");

  std::string attrs = "shape=box";
  if (!style.empty()) attrs += ", style=" + quote(style);
  if (f.kind == FeatureKind::InterfaceMethod) attrs += ", fillcolor=lightgray";
  if (f.is_static) {
    attrs += ", label=<<U>" + html_escape(label_text(f)) + "</U>>";
  } else {
    attrs += ", label=" + quote(label_text(f));
  }
  return attrs;
}

}  // namespace

std::string render_dot(const OcdfClass& input, const RenderOptions& opts) {
  OcdfClass cls = project(input, opts.level);
  if (!opts.show_inherited) {
    std::unordered_set<std::string> hidden;
    std::vector<Feature> kept;
    for (auto& f : cls.features) {
      if (f.inherited) {
        hidden.insert(f.id);
      } else {
        kept.push_back(std::move(f));
      }
    }
    cls.features = std::move(kept);
    std::erase_if(cls.flows, [&](const Flow& fl) {
      return hidden.count(fl.source) || hidden.count(fl.target);
    });
  }

  std::unordered_map<std::string, std::string> node_id;
  std::unordered_set<std::string> used;
  for (const auto& f : cls.features) {
    std::string base = sanitize_id(f.id);
    std::string candidate = base;
    for (int n = 2; !used.insert(candidate).second; ++n) candidate = base + "_" + std::to_string(n);
    node_id.emplace(f.id, candidate);
  }

  std::string out;
  out += "digraph " + quote(cls.name) + " {\n";
  out += std::string("  rankdir=") + (opts.rankdir == RankDir::LeftRight ? "LR" : "TB") + ";\n";
  out += "  subgraph " + quote("cluster_" + sanitize_id(cls.name)) + " {\n";
  out += "    label=" + quote(cls.name) + ";\n";
  for (const auto& f : cls.features) {
    out += "    " + node_id.at(f.id) + " [" + node_attributes(f) + "];\n";
  }
  for (const auto& fl : cls.flows) {
    out += "    " + node_id.at(fl.source) + " -> " + node_id.at(fl.target);
    std::string attrs;
    if (fl.kind == FlowKind::Control) attrs = "style=dashed";
    if (fl.label) attrs += std::string(attrs.empty() ? "" : ", ") + "label=" + quote(*fl.label);
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  out += "  }\n";
  out += "}\n";
  return out;
}

}  // namespace ocdf

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocdf/diagnostic.hpp"

namespace ocdf {

inline constexpr int kFormatVersion = 1;

enum class FeatureKind { Member, Method, InterfaceMethod };
enum class Visibility { Public, Protected, Private };
enum class FlowKind { Control, Data };

/// A node of the diagram: a data member or a routine of the modeled class.
///
/// `decl` holds the type for members and the signature text for methods.
/// `is_const` only carries meaning for members, `is_constructor` only for
/// the two method kinds.
struct Feature {
  std::string id;
  FeatureKind kind = FeatureKind::Member;
  std::string name;
  std::string decl;
  Visibility visibility = Visibility::Private;
  bool is_static = false;
  bool is_const = false;
  bool is_constructor = false;
  bool inherited = false;

  bool is_method() const { return kind != FeatureKind::Member; }
  bool is_member() const { return kind == FeatureKind::Member; }

  bool operator==(const Feature&) const = default;
};

/// Directed edge. Control flows go caller -> callee, data flows go
/// provider -> consumer.
struct Flow {
  FlowKind kind = FlowKind::Data;
  std::string source;
  std::string target;
  std::optional<std::string> label;

  bool same_edge(const Flow& other) const {
    return kind == other.kind && source == other.source && target == other.target;
  }

  bool operator==(const Flow&) const = default;
};

struct OcdfClass {
  std::string name;
  std::vector<Feature> features;
  std::vector<Flow> flows;

  const Feature* find(std::string_view id) const;

  bool operator==(const OcdfClass&) const = default;
};

struct OcdfModel {
  int format_version = kFormatVersion;
  std::vector<OcdfClass> classes;

  const OcdfClass* find(std::string_view class_name) const;

  bool operator==(const OcdfModel&) const = default;
};

std::string_view to_string(FeatureKind kind);
std::string_view to_string(Visibility visibility);
std::string_view to_string(FlowKind kind);
std::optional<FeatureKind> parse_feature_kind(std::string_view token);
std::optional<Visibility> parse_visibility(std::string_view token);
std::optional<FlowKind> parse_flow_kind(std::string_view token);

/// Checks feature id uniqueness and flow endpoint resolution, and collapses
/// flows sharing (kind, source, target) to the first occurrence.
Result<OcdfClass> build_class(std::string name, std::vector<Feature> features,
                              std::vector<Flow> flows);

/// Canonical JSON document, terminated by a single LF.
std::string serialize(const OcdfModel& model);
Result<OcdfModel> deserialize(std::string_view bytes);

}  // namespace ocdf

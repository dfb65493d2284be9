#include "ocdf/model.hpp"

#include <set>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

namespace ocdf {

using json = nlohmann::ordered_json;

const Feature* OcdfClass::find(std::string_view id) const {
  for (const auto& f : features) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

const OcdfClass* OcdfModel::find(std::string_view class_name) const {
  for (const auto& c : classes) {
    if (c.name == class_name) return &c;
  }
  return nullptr;
}

std::string_view to_string(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::Member: return "member";
    case FeatureKind::Method: return "method";
    case FeatureKind::InterfaceMethod: return "interface_method";
  }
  return "member";
}

std::string_view to_string(Visibility visibility) {
  switch (visibility) {
    case Visibility::Public: return "public";
    case Visibility::Protected: return "protected";
    case Visibility::Private: return "private";
  }
  return "private";
}

std::string_view to_string(FlowKind kind) {
  return kind == FlowKind::Control ? "control" : "data";
}

std::optional<FeatureKind> parse_feature_kind(std::string_view token) {
  if (token == "member") return FeatureKind::Member;
  if (token == "method") return FeatureKind::Method;
  if (token == "interface_method") return FeatureKind::InterfaceMethod;
  return std::nullopt;
}

std::optional<Visibility> parse_visibility(std::string_view token) {
  if (token == "public") return Visibility::Public;
  if (token == "protected") return Visibility::Protected;
  if (token == "private") return Visibility::Private;
  return std::nullopt;
}

std::optional<FlowKind> parse_flow_kind(std::string_view token) {
  if (token == "control") return FlowKind::Control;
  if (token == "data") return FlowKind::Data;
  return std::nullopt;
}

Result<OcdfClass> build_class(std::string name, std::vector<Feature> features,
                              std::vector<Flow> flows) {
  std::vector<Diagnostic> errors;
  std::unordered_set<std::string> ids;
  for (const auto& f : features) {
    if (!ids.insert(f.id).second) {
      errors.push_back(make_error(Code::DupId, "duplicate feature id '" + f.id + "'", name, {f.id}));
    }
  }

  OcdfClass cls;
  cls.name = std::move(name);
  std::set<std::tuple<FlowKind, std::string, std::string>> seen;
  for (auto& flow : flows) {
    bool dangling = false;
    for (const auto* end : {&flow.source, &flow.target}) {
      if (!ids.count(*end)) {
        errors.push_back(make_error(Code::DanglingRef,
                                    std::string(to_string(flow.kind)) + " flow " + flow.source +
                                        " -> " + flow.target + " references unknown feature '" +
                                        *end + "'",
                                    cls.name, {flow.source, flow.target}));
        dangling = true;
      }
    }
    if (dangling) continue;
    if (seen.emplace(flow.kind, flow.source, flow.target).second) {
      cls.flows.push_back(std::move(flow));
    }
  }
  if (!errors.empty()) return errors;
  cls.features = std::move(features);
  return cls;
}

std::string serialize(const OcdfModel& model) {
  json doc;
  doc["format_version"] = model.format_version;
  json classes = json::array();
  for (const auto& cls : model.classes) {
    json c;
    c["name"] = cls.name;
    json features = json::array();
    for (const auto& f : cls.features) {
      json jf;
      jf["id"] = f.id;
      jf["kind"] = to_string(f.kind);
      jf["name"] = f.name;
      jf["decl"] = f.decl;
      jf["visibility"] = to_string(f.visibility);
      jf["is_static"] = f.is_static;
      jf["is_const"] = f.is_const;
      jf["is_constructor"] = f.is_constructor;
      jf["inherited"] = f.inherited;
      features.push_back(std::move(jf));
    }
    c["features"] = std::move(features);
    json flows = json::array();
    for (const auto& fl : cls.flows) {
      json jf;
      jf["kind"] = to_string(fl.kind);
      jf["source"] = fl.source;
      jf["target"] = fl.target;
      jf["label"] = fl.label ? json(*fl.label) : json(nullptr);
      flows.push_back(std::move(jf));
    }
    c["flows"] = std::move(flows);
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(-1, ' ', false, json::error_handler_t::replace) + "\n";
}

namespace {

// Collects structural errors while walking a parsed document.
class Reader {
 public:
  std::vector<Diagnostic> errors;

  void parse_error(const std::string& path, const std::string& what) {
    errors.push_back(make_error(Code::Parse, path + ": " + what));
  }

  bool check_keys(const json& obj, const std::string& path,
                  std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) {
      parse_error(path, "expected an object");
      return false;
    }
    for (const auto& [key, _] : obj.items()) {
      bool known = false;
      for (auto a : allowed) known = known || key == a;
      if (!known) parse_error(path, "unknown field '" + key + "'");
    }
    return true;
  }

  std::optional<std::string> string_field(const json& obj, const std::string& path,
                                          const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      parse_error(path, std::string("missing field '") + key + "'");
      return std::nullopt;
    }
    if (!it->is_string()) {
      parse_error(path + "." + key, "expected a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

  bool bool_field(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return false;
    if (!it->is_boolean()) {
      parse_error(path + "." + key, "expected a boolean");
      return false;
    }
    return it->get<bool>();
  }

  template <typename Enum, typename ParseFn>
  std::optional<Enum> enum_field(const json& obj, const std::string& path, const char* key,
                                 ParseFn parse) {
    auto token = string_field(obj, path, key);
    if (!token) return std::nullopt;
    auto value = parse(*token);
    if (!value) {
      errors.push_back(make_error(Code::BadEnum, path + "." + key + ": unknown token '" +
                                                     *token + "'"));
    }
    return value;
  }

  std::optional<Feature> feature(const json& obj, const std::string& path) {
    if (!check_keys(obj, path,
                    {"id", "kind", "name", "decl", "visibility", "is_static", "is_const",
                     "is_constructor", "inherited"})) {
      return std::nullopt;
    }
    Feature f;
    auto id = string_field(obj, path, "id");
    auto kind = enum_field<FeatureKind>(obj, path, "kind", parse_feature_kind);
    auto name = string_field(obj, path, "name");
    auto decl = string_field(obj, path, "decl");
    auto vis = enum_field<Visibility>(obj, path, "visibility", parse_visibility);
    f.is_static = bool_field(obj, path, "is_static");
    f.is_const = bool_field(obj, path, "is_const");
    f.is_constructor = bool_field(obj, path, "is_constructor");
    f.inherited = bool_field(obj, path, "inherited");
    if (!id || !kind || !name || !decl || !vis) return std::nullopt;
    f.id = *id;
    f.kind = *kind;
    f.name = *name;
    f.decl = *decl;
    f.visibility = *vis;
    return f;
  }

  std::optional<Flow> flow(const json& obj, const std::string& path) {
    if (!check_keys(obj, path, {"kind", "source", "target", "label"})) return std::nullopt;
    Flow fl;
    auto kind = enum_field<FlowKind>(obj, path, "kind", parse_flow_kind);
    auto source = string_field(obj, path, "source");
    auto target = string_field(obj, path, "target");
    if (auto it = obj.find("label"); it != obj.end() && !it->is_null()) {
      if (it->is_string()) {
        fl.label = it->get<std::string>();
      } else {
        parse_error(path + ".label", "expected a string or null");
      }
    }
    if (!kind || !source || !target) return std::nullopt;
    fl.kind = *kind;
    fl.source = *source;
    fl.target = *target;
    return fl;
  }

  template <typename T, typename Fn>
  std::vector<T> array_field(const json& obj, const std::string& path, const char* key, Fn each) {
    std::vector<T> out;
    auto it = obj.find(key);
    if (it == obj.end()) {
      parse_error(path, std::string("missing field '") + key + "'");
      return out;
    }
    if (!it->is_array()) {
      parse_error(path + "." + key, "expected an array");
      return out;
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      auto item = each((*it)[i], path + "." + key + "[" + std::to_string(i) + "]");
      if (item) out.push_back(std::move(*item));
    }
    return out;
  }
};

}  // namespace

Result<OcdfModel> deserialize(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    return make_error(Code::Parse, std::string("malformed document: ") + e.what());
  }

  Reader reader;
  OcdfModel model;
  if (!reader.check_keys(doc, "$", {"format_version", "classes"})) return reader.errors;

  auto version = doc.find("format_version");
  if (version == doc.end()) {
    reader.parse_error("$", "missing field 'format_version'");
  } else if (!version->is_number_integer() || version->get<int>() != kFormatVersion) {
    reader.parse_error("$.format_version", "unsupported format version " + version->dump());
  }

  struct RawClass {
    std::string name;
    std::vector<Feature> features;
    std::vector<Flow> flows;
  };
  auto raw_classes = reader.array_field<RawClass>(
      doc, "$", "classes", [&](const json& obj, const std::string& path) -> std::optional<RawClass> {
        if (!reader.check_keys(obj, path, {"name", "features", "flows"})) return std::nullopt;
        auto name = reader.string_field(obj, path, "name");
        RawClass raw;
        raw.features = reader.array_field<Feature>(
            obj, path, "features",
            [&](const json& f, const std::string& p) { return reader.feature(f, p); });
        raw.flows = reader.array_field<Flow>(
            obj, path, "flows", [&](const json& f, const std::string& p) { return reader.flow(f, p); });
        if (!name) return std::nullopt;
        raw.name = *name;
        return raw;
      });
  if (!reader.errors.empty()) return reader.errors;

  std::vector<Diagnostic> errors;
  std::unordered_set<std::string> class_names;
  for (auto& raw : raw_classes) {
    if (!class_names.insert(raw.name).second) {
      errors.push_back(make_error(Code::DupId, "duplicate class name '" + raw.name + "'", raw.name));
    }
    auto built = build_class(std::move(raw.name), std::move(raw.features), std::move(raw.flows));
    if (built) {
      model.classes.push_back(std::move(built).value());
    } else {
      errors.insert(errors.end(), built.errors().begin(), built.errors().end());
    }
  }
  if (!errors.empty()) return errors;
  return model;
}

}  // namespace ocdf

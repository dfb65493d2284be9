#include "ocdf/validator.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace ocdf {

namespace {

struct Rule {
  Code code;
  std::string_view stereotype;
  std::string_view text;
};

constexpr Rule kRules[] = {
    {Code::CfEndpoint, "ControlFlow",
     "a control flow represents a method call, so both its caller and its callee must be "
     "method features (method or interface_method)"},
    {Code::DfEndpoint, "DataFlow",
     "a data flow must connect two methods, or a method and a data member; member-to-member "
     "data flows are not allowed"},
    {Code::ConstWrite, "DataFlow",
     "writes into constant data members are reserved for constructors: a data flow whose "
     "target is a const member must originate in a method with is_constructor set"},
    {Code::IfaceVis, "InterfaceMethod", "an interface method must be public"},
    {Code::MethodVis, "Method", "a non-interface method must not be public"},
    {Code::DanglingRef, "OCDFElement",
     "every flow endpoint must name a feature owned by the same class"},
    {Code::DupId, "OCDFClass",
     "feature ids must be unique within a class and class names unique within a model"},
    {Code::BadEnum, "model document",
     "kind, visibility and diagnostic code tokens must come from their fixed vocabulary"},
    {Code::Parse, "model document", "the input must be a well-formed document of the expected shape"},
    {Code::NoClass, "MiniOO", "the selected class must be declared in the source"},
    {Code::Resolve, "MiniOO",
     "every name used in a method body must resolve to a parameter, a local, or a field or "
     "method of the class or one of its ancestors"},
    {Code::InheritCycle, "MiniOO", "the parent chain of a class must not loop back on itself"},
};

const Rule& rule_for(Code code) {
  for (const auto& r : kRules) {
    if (r.code == code) return r;
  }
  return kRules[0];
}

std::string describe(const Flow& flow) {
  return std::string(to_string(flow.kind)) + " flow " + flow.source + " -> " + flow.target;
}

void check_class(const OcdfClass& cls, std::vector<Diagnostic>& out) {
  auto emit = [&](Code code, std::string detail, std::vector<std::string> subjects) {
    out.push_back(make_error(code, detail + ": " + std::string(rule_for(code).text), cls.name,
                             std::move(subjects)));
  };

  std::unordered_map<std::string_view, const Feature*> by_id;
  for (const auto& f : cls.features) {
    if (!by_id.emplace(f.id, &f).second) {
      emit(Code::DupId, "feature id '" + f.id + "' is declared more than once", {f.id});
    }
    if (f.kind == FeatureKind::InterfaceMethod && f.visibility != Visibility::Public) {
      emit(Code::IfaceVis,
           "interface method '" + f.id + "' has " + std::string(to_string(f.visibility)) +
               " visibility",
           {f.id});
    }
    if (f.kind == FeatureKind::Method && f.visibility == Visibility::Public) {
      emit(Code::MethodVis, "method '" + f.id + "' is public", {f.id});
    }
  }

  for (const auto& flow : cls.flows) {
    auto src_it = by_id.find(flow.source);
    auto dst_it = by_id.find(flow.target);
    if (src_it == by_id.end() || dst_it == by_id.end()) {
      emit(Code::DanglingRef, describe(flow) + " has an unresolved endpoint", {flow.source, flow.target});
      continue;
    }
    const Feature& src = *src_it->second;
    const Feature& dst = *dst_it->second;
    if (flow.kind == FlowKind::Control) {
      if (!src.is_method() || !dst.is_method()) {
        emit(Code::CfEndpoint, describe(flow) + " touches a data member", {flow.source, flow.target});
      }
      continue;
    }
    if (src.is_member() && dst.is_member()) {
      emit(Code::DfEndpoint, describe(flow) + " connects two data members", {flow.source, flow.target});
    } else if (src.is_method() && dst.is_member() && dst.is_const && !src.is_constructor) {
      emit(Code::ConstWrite,
           describe(flow) + " writes const member '" + dst.id + "' from non-constructor '" +
               src.id + "'",
           {flow.source, flow.target});
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const OcdfClass& cls) {
  std::vector<Diagnostic> out;
  check_class(cls, out);
  std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.class_name, a.code, a.subjects) < std::tie(b.class_name, b.code, b.subjects);
  });
  return out;
}

std::vector<Diagnostic> validate(const OcdfModel& model) {
  std::vector<Diagnostic> out;
  std::unordered_set<std::string_view> names;
  for (const auto& cls : model.classes) {
    if (!names.insert(cls.name).second) {
      out.push_back(make_error(Code::DupId,
                               "class name '" + cls.name + "' is declared more than once: " +
                                   std::string(rule_for(Code::DupId).text),
                               cls.name, {cls.name}));
    }
    check_class(cls, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.class_name, a.code, a.subjects) < std::tie(b.class_name, b.code, b.subjects);
  });
  return out;
}

std::string explain(Code code) {
  const Rule& r = rule_for(code);
  return std::string(code_name(code)) + " (" + std::string(r.stereotype) + "): " +
         std::string(r.text);
}

Result<std::string> explain(std::string_view code) {
  auto parsed = parse_code(code);
  if (!parsed) {
    return make_error(Code::BadEnum, "unknown diagnostic code '" + std::string(code) + "'");
  }
  return explain(*parsed);
}

}  // namespace ocdf

#include "ocdf/diagnostic.hpp"

#include <array>

namespace ocdf {

namespace {

constexpr std::array<std::pair<Code, std::string_view>, 12> kCodeNames{{
    {Code::CfEndpoint, "E_CF_ENDPOINT"},
    {Code::DfEndpoint, "E_DF_ENDPOINT"},
    {Code::ConstWrite, "E_CONST_WRITE"},
    {Code::IfaceVis, "E_IFACE_VIS"},
    {Code::MethodVis, "E_METHOD_VIS"},
    {Code::DanglingRef, "E_DANGLING_REF"},
    {Code::DupId, "E_DUP_ID"},
    {Code::BadEnum, "E_BAD_ENUM"},
    {Code::Parse, "E_PARSE"},
    {Code::NoClass, "E_NO_CLASS"},
    {Code::Resolve, "E_RESOLVE"},
    {Code::InheritCycle, "E_INHERIT_CYCLE"},
}};

}  // namespace

std::string_view code_name(Code code) {
  for (const auto& [c, name] : kCodeNames) {
    if (c == code) return name;
  }
  return "E_UNKNOWN";
}

std::optional<Code> parse_code(std::string_view token) {
  for (const auto& [c, name] : kCodeNames) {
    if (name == token) return c;
  }
  return std::nullopt;
}

std::string_view severity_name(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

Diagnostic make_error(Code code, std::string message, std::string class_name,
                      std::vector<std::string> subjects) {
  Diagnostic d;
  d.code = code;
  d.severity = Severity::Error;
  d.message = std::move(message);
  d.class_name = std::move(class_name);
  d.subjects = std::move(subjects);
  return d;
}

Diagnostic make_error_at(Code code, std::string message, SourceSpan span) {
  Diagnostic d = make_error(code, std::move(message));
  d.span = span;
  return d;
}

}  // namespace ocdf

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ocdf {

// Profile constraint codes come first; their order is the validator's sort
// order. The trailing codes are only produced by the source extractor.
enum class Code {
  CfEndpoint,
  DfEndpoint,
  ConstWrite,
  IfaceVis,
  MethodVis,
  DanglingRef,
  DupId,
  BadEnum,
  Parse,
  NoClass,
  Resolve,
  InheritCycle,
};

enum class Severity { Error, Warning };

struct SourceSpan {
  int line = 0;
  int column = 0;

  bool operator==(const SourceSpan&) const = default;
};

struct Diagnostic {
  Code code = Code::Parse;
  Severity severity = Severity::Error;
  std::string message;
  std::string class_name;
  std::vector<std::string> subjects;
  std::optional<SourceSpan> span;

  bool operator==(const Diagnostic&) const = default;
};

/// Canonical token, e.g. "E_CONST_WRITE".
std::string_view code_name(Code code);
std::optional<Code> parse_code(std::string_view token);
std::string_view severity_name(Severity severity);

Diagnostic make_error(Code code, std::string message, std::string class_name = {},
                      std::vector<std::string> subjects = {});
Diagnostic make_error_at(Code code, std::string message, SourceSpan span);

/// Value or a non-empty list of error diagnostics.
template <typename T>
class Result {
 public:
  Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}
  Result(std::vector<Diagnostic> errors) : state_(std::in_place_index<1>, std::move(errors)) {}
  Result(Diagnostic error) : state_(std::in_place_index<1>, std::vector<Diagnostic>{std::move(error)}) {}

  bool ok() const { return state_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<0>(state_); }
  T& value() & { return std::get<0>(state_); }
  T&& value() && { return std::get<0>(std::move(state_)); }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }
  T& operator*() & { return value(); }
  T* operator->() { return &value(); }

  const std::vector<Diagnostic>& errors() const { return std::get<1>(state_); }

 private:
  std::variant<T, std::vector<Diagnostic>> state_;
};

}  // namespace ocdf

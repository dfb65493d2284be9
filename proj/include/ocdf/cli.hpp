#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ocdf/analysis.hpp"
#include "ocdf/render.hpp"

namespace ocdf::cli {

enum class Subcommand { Extract, Validate, Analyze, Render };
enum class OutputFormat { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitFailure = 2;

struct CliConfig {
  Subcommand subcommand = Subcommand::Validate;
  std::vector<std::string> inputs;  // "-" is standard input
  std::optional<std::string> output;
  std::optional<std::string> class_name;
  AbstractionLevel level = AbstractionLevel::L3;
  bool lazy_inheritance = false;
  OutputFormat format = OutputFormat::Text;
  // validate: forward the model to stdout when clean, diagnostics to stderr.
  bool pass_through = false;
  bool show_inherited = true;
  RankDir rankdir = RankDir::TopDown;
  bool styled = false;
};

struct CliResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one subcommand over already-read input contents (parallel to
/// config.inputs). Inputs are processed concurrently; output follows input
/// order and the exit code is the worst per-input code.
CliResult run(const CliConfig& config, const std::vector<std::string>& contents);

/// argv-style front end: parses flags, reads inputs, writes outputs.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err, bool styled = false);

}  // namespace ocdf::cli

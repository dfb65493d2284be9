#include "ocdf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ocdf/minioo.hpp"
#include "ocdf/model.hpp"
#include "ocdf/validator.hpp"

namespace ocdf::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& items, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string diagnostic_line(const Diagnostic& d, bool styled) {
  std::string code(code_name(d.code));
  if (styled) code = (d.severity == Severity::Error ? "\x1b[31m" : "\x1b[33m") + code + "\x1b[0m";
  std::string line = code + " class=" + d.class_name + " subjects=" + join(d.subjects) + ": ";
  if (d.span) line += std::to_string(d.span->line) + ":" + std::to_string(d.span->column) + ": ";
  return line + d.message + "\n";
}

json diagnostic_json(const Diagnostic& d) {
  json j;
  j["code"] = code_name(d.code);
  j["severity"] = severity_name(d.severity);
  j["message"] = d.message;
  j["class"] = d.class_name;
  j["subjects"] = d.subjects;
  if (d.span) j["span"] = {{"line", d.span->line}, {"column", d.span->column}};
  return j;
}

std::string format_diagnostics(const std::vector<Diagnostic>& diags, OutputFormat format,
                               bool styled) {
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& d : diags) arr.push_back(diagnostic_json(d));
    return arr.dump() + "\n";
  }
  std::string out;
  for (const auto& d : diags) out += diagnostic_line(d, styled);
  return out;
}

bool only_parse_errors(const std::vector<Diagnostic>& diags) {
  return std::all_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.code == Code::Parse; });
}

std::string with_input(const std::string& input, const std::string& message) {
  return "ocdf: " + input + ": " + message + "\n";
}

CliResult run_extract(const CliConfig& cfg, const std::string& input, const std::string& text) {
  CliResult r;
  auto program = minioo::parse(text);
  if (!program) {
    r.exit_code = kExitFailure;
    r.err = format_diagnostics(program.errors(), OutputFormat::Text, false);
    return r;
  }
  std::string class_name;
  if (cfg.class_name) {
    class_name = *cfg.class_name;
    if (!program->find(class_name)) {
      r.exit_code = kExitFailure;
      r.err = with_input(input, "no class named '" + class_name + "'");
      return r;
    }
  } else if (program->classes.size() == 1) {
    class_name = program->classes.front().name;
  } else {
    r.exit_code = kExitFailure;
    r.err = with_input(input, std::to_string(program->classes.size()) +
                                  " classes declared; select one with --class");
    return r;
  }

  auto cls = cfg.lazy_inheritance ? minioo::extract_lazy_inherited(*program, class_name)
                                  : minioo::extract(*program, class_name);
  if (!cls) {
    r.exit_code = kExitDiagnostics;
    r.err = format_diagnostics(cls.errors(), OutputFormat::Text, false);
    return r;
  }
  OcdfModel model;
  model.classes.push_back(std::move(cls).value());
  r.out = serialize(model);
  return r;
}

// Loads a model document; on failure fills `r` and returns nullopt.
std::optional<OcdfModel> load_model(const std::string& text, CliResult& r) {
  auto model = deserialize(text);
  if (model) return std::move(model).value();
  r.exit_code = only_parse_errors(model.errors()) ? kExitFailure : kExitDiagnostics;
  r.err = format_diagnostics(model.errors(), OutputFormat::Text, false);
  return std::nullopt;
}

// Classes an analyze/render invocation applies to.
std::optional<std::vector<const OcdfClass*>> select_classes(const CliConfig& cfg,
                                                            const OcdfModel& model,
                                                            const std::string& input,
                                                            CliResult& r) {
  std::vector<const OcdfClass*> out;
  if (cfg.class_name) {
    const OcdfClass* cls = model.find(*cfg.class_name);
    if (!cls) {
      r.exit_code = kExitFailure;
      r.err = with_input(input, "no class named '" + *cfg.class_name + "'");
      return std::nullopt;
    }
    out.push_back(cls);
  } else {
    for (const auto& c : model.classes) out.push_back(&c);
  }
  return out;
}

CliResult run_validate(const CliConfig& cfg, const std::string& text) {
  CliResult r;
  auto model = deserialize(text);
  if (!model) {
    r.exit_code = only_parse_errors(model.errors()) ? kExitFailure : kExitDiagnostics;
    std::string report = format_diagnostics(model.errors(), cfg.format, cfg.styled);
    (cfg.pass_through ? r.err : r.out) = report;
    return r;
  }
  auto diags = validate(*model);
  bool has_errors = std::any_of(diags.begin(), diags.end(),
                                [](const Diagnostic& d) { return d.severity == Severity::Error; });
  r.exit_code = has_errors ? kExitDiagnostics : kExitOk;
  if (cfg.pass_through) {
    r.err = format_diagnostics(diags, OutputFormat::Text, false);
    if (!has_errors) r.out = serialize(*model);
  } else if (cfg.format == OutputFormat::Json || !diags.empty()) {
    r.out = format_diagnostics(diags, cfg.format, cfg.styled);
  }
  return r;
}

json analysis_json(const OcdfClass& cls) {
  auto report = substructures(cls);
  json j;
  j["class"] = cls.name;
  json sub;
  sub["components"] = report.components;
  json cuts = json::array();
  for (const auto& c : report.cut_suggestions) {
    cuts.push_back({{"components", {c.first, c.second}},
                    {"affinity", c.affinity},
                    {"flows_required", c.flows_required}});
  }
  sub["cut_suggestions"] = std::move(cuts);
  j["substructures"] = std::move(sub);
  json races = json::array();
  for (const auto& h : detect_races(cls)) {
    races.push_back({{"member", h.member},
                     {"writers", h.writers},
                     {"readers", h.readers},
                     {"entry_points", h.entry_points}});
  }
  j["race_hazards"] = std::move(races);
  return j;
}

std::string analysis_text(const OcdfClass& cls) {
  auto report = substructures(cls);
  auto hazards = detect_races(cls);
  std::ostringstream os;
  os << "class " << cls.name << "\n";
  os << "  substructures: " << report.components.size() << "\n";
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    os << "    [" << i << "] " << join(report.components[i], ", ") << "\n";
  }
  os << "  cut suggestions: " << report.cut_suggestions.size() << "\n";
  for (const auto& c : report.cut_suggestions) {
    os << "    [" << c.first << "] <-> [" << c.second << "] affinity=" << c.affinity
       << " flows_required=" << c.flows_required << "\n";
  }
  os << "  race hazards: " << hazards.size() << "\n";
  for (const auto& h : hazards) {
    os << "    member=" << h.member << " writers=" << join(h.writers) << " readers="
       << join(h.readers) << " entry_points=" << join(h.entry_points) << "\n";
  }
  return os.str();
}

CliResult run_analyze(const CliConfig& cfg, const std::string& input, const std::string& text) {
  CliResult r;
  auto model = load_model(text, r);
  if (!model) return r;
  auto classes = select_classes(cfg, *model, input, r);
  if (!classes) return r;
  json arr = json::array();
  for (const auto* cls : *classes) {
    OcdfClass projected = project(*cls, cfg.level);
    if (cfg.format == OutputFormat::Json) {
      arr.push_back(analysis_json(projected));
    } else {
      r.out += analysis_text(projected);
    }
  }
  if (cfg.format == OutputFormat::Json) r.out = arr.dump() + "\n";
  return r;
}

CliResult run_render(const CliConfig& cfg, const std::string& input, const std::string& text) {
  CliResult r;
  auto model = load_model(text, r);
  if (!model) return r;
  auto classes = select_classes(cfg, *model, input, r);
  if (!classes) return r;
  if (classes->size() != 1) {
    r.exit_code = kExitFailure;
    r.err = with_input(input, "model holds " + std::to_string(classes->size()) +
                                  " classes; select one with --class");
    return r;
  }
  RenderOptions opts;
  opts.level = cfg.level;
  opts.show_inherited = cfg.show_inherited;
  opts.rankdir = cfg.rankdir;
  r.out = render_dot(*classes->front(), opts);
  return r;
}

CliResult run_one(const CliConfig& cfg, const std::string& input, const std::string& text) {
  switch (cfg.subcommand) {
    case Subcommand::Extract: return run_extract(cfg, input, text);
    case Subcommand::Validate: return run_validate(cfg, text);
    case Subcommand::Analyze: return run_analyze(cfg, input, text);
    case Subcommand::Render: return run_render(cfg, input, text);
  }
  return {};
}

}  // namespace

CliResult run(const CliConfig& config, const std::vector<std::string>& contents) {
  std::vector<std::future<CliResult>> jobs;
  for (std::size_t i = 0; i < contents.size(); ++i) {
    const std::string input = i < config.inputs.size() ? config.inputs[i] : "-";
    jobs.push_back(std::async(std::launch::async, [&config, &contents, i, input] {
      return run_one(config, input, contents[i]);
    }));
  }
  CliResult total;
  for (auto& job : jobs) {
    CliResult r = job.get();
    total.exit_code = std::max(total.exit_code, r.exit_code);
    total.out += r.out;
    total.err += r.err;
  }
  return total;
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err, bool styled) {
  CLI::App app{"Build, check, analyze and draw object control/data-flow models", "ocdf"};
  app.require_subcommand(1, 1);

  CliConfig cfg;
  cfg.styled = styled;
  std::string level = "L3";
  std::string format = "text";
  std::string rankdir = "top_down";
  bool no_inherited = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("inputs", cfg.inputs, "Input files ('-' for standard input)")->required();
    sub->add_option("-o,--output", cfg.output, "Write output to this file");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_class = [&](CLI::App* sub) {
    sub->add_option("-c,--class", cfg.class_name, "Class to select");
  };
  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--level", level, "Abstraction level")
        ->check(CLI::IsMember({"L1", "L2", "L3"}))
        ->capture_default_str();
  };

  auto* extract = app.add_subcommand("extract", "Extract a model document from MiniOO source");
  add_common(extract);
  add_class(extract);
  extract->add_flag("--lazy", cfg.lazy_inheritance, "Include ancestor features used by the class");

  auto* validate = app.add_subcommand("validate", "Check model documents against the profile rules");
  add_common(validate);
  add_format(validate);
  validate->add_flag("--pass", cfg.pass_through,
                     "Forward a clean model to stdout and report diagnostics on stderr");

  auto* analyze = app.add_subcommand("analyze", "Report substructures and race hazards");
  add_common(analyze);
  add_format(analyze);
  add_class(analyze);
  add_level(analyze);

  auto* render = app.add_subcommand("render", "Render a model class as Graphviz DOT");
  add_common(render);
  add_class(render);
  add_level(render);
  render->add_option("--rankdir", rankdir, "Layout direction")
      ->check(CLI::IsMember({"top_down", "left_right"}))
      ->capture_default_str();
  render->add_flag("--no-inherited", no_inherited, "Hide inherited features");

  try {
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  if (extract->parsed()) cfg.subcommand = Subcommand::Extract;
  if (validate->parsed()) cfg.subcommand = Subcommand::Validate;
  if (analyze->parsed()) cfg.subcommand = Subcommand::Analyze;
  if (render->parsed()) cfg.subcommand = Subcommand::Render;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  cfg.level = parse_level(level).value_or(AbstractionLevel::L3);
  cfg.rankdir = parse_rankdir(rankdir).value_or(RankDir::TopDown);
  cfg.show_inherited = !no_inherited;
  if (cfg.output) cfg.styled = false;

  std::vector<std::string> contents;
  bool stdin_used = false;
  for (const auto& path : cfg.inputs) {
    if (path == "-") {
      if (stdin_used) {
        err << "ocdf: standard input given more than once\n";
        return kExitFailure;
      }
      stdin_used = true;
      contents.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      continue;
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      err << "ocdf: cannot read '" << path << "'\n";
      return kExitFailure;
    }
    contents.emplace_back(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }

  CliResult result = run(cfg, contents);
  err << result.err;
  if (cfg.output) {
    std::ofstream file(*cfg.output, std::ios::binary);
    file << result.out;
    if (!file) {
      err << "ocdf: cannot write '" << *cfg.output << "'\n";
      return kExitFailure;
    }
  } else {
    out << result.out;
  }
  return result.exit_code;
}

}  // namespace ocdf::cli

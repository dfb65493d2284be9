#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "ocdf/cli.hpp"
#include "ocdf/model.hpp"
#include "ocdf/render.hpp"
#include "support/corpus.hpp"
#include "support/dot_check.hpp"
#include "support/oracles.hpp"

using namespace ocdf;
using namespace ocdf::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "ocdf");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::main_entry(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(OCDF_CORPUS_DIR) + "/" + name; }
std::string data(const std::string& name) { return std::string(OCDF_DATA_DIR) + "/" + name; }

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("extract writes a canonical model") {
  Run r = invoke({"extract", corpus("counter.moo")});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  auto model = deserialize(r.out);
  REQUIRE(model.ok());
  REQUIRE(model->classes.size() == 1);
  CHECK(model->classes[0].name == "Counter");
  CHECK(serialize(*model) == r.out);
}

TEST_CASE("extract failures") {
  CHECK(invoke({"extract", data("missing.moo")}).code == 2);
  CHECK(invoke({"extract", "--class", "Nope", corpus("counter.moo")}).code == 2);
  Run multi = invoke({"extract", data("two_classes.moo")});
  CHECK(multi.code == 2);
  CHECK(multi.err.find("--class") != std::string::npos);
  CHECK(invoke({"extract", "--class", "B", data("two_classes.moo")}).code == 0);
  Run unresolved = invoke({"extract", data("unresolved.moo")});
  CHECK(unresolved.code == 1);
  CHECK(unresolved.err.rfind("E_RESOLVE", 0) == 0);
  CHECK(invoke({"extract", "-"}, "class {").code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("extract --lazy includes used ancestor features") {
  Run plain = invoke({"extract", "--class", "Account", corpus("account.moo")});
  Run lazy = invoke({"extract", "--lazy", "--class", "Account", corpus("account.moo")});
  REQUIRE(plain.code == 0);
  REQUIRE(lazy.code == 0);
  auto p = deserialize(plain.out);
  auto l = deserialize(lazy.out);
  REQUIRE(p.ok());
  REQUIRE(l.ok());
  CHECK(l->classes[0].features.size() > p->classes[0].features.size());
  CHECK(l->classes[0].find("Ledger::store") != nullptr);
}

TEST_CASE("validate reports one line per diagnostic") {
  Run r = invoke({"validate", data("bad_df.json")});
  CHECK(r.code == 1);
  CHECK(count_lines(r.out) == 1);
  CHECK(r.out.rfind("E_DF_ENDPOINT class=Pair subjects=a,b: ", 0) == 0);
  CHECK(r.out.find("\x1b[") == std::string::npos);

  Run j = invoke({"validate", "--format", "json", data("bad_df.json")});
  CHECK(j.code == 1);
  auto arr = nlohmann::json::parse(j.out);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["code"] == "E_DF_ENDPOINT");
  CHECK(arr[0]["severity"] == "error");
  CHECK(arr[0]["class"] == "Pair");
  CHECK(arr[0]["subjects"] == nlohmann::json::array({"a", "b"}));
}

TEST_CASE("validate: clean, malformed and styled") {
  Run model = invoke({"extract", corpus("counter.moo")});
  Run clean = invoke({"validate", "-"}, model.out);
  CHECK(clean.code == 0);
  CHECK(clean.out.empty());
  Run json_clean = invoke({"validate", "--format", "json", "-"}, model.out);
  CHECK(json_clean.out == "[]\n");
  CHECK(invoke({"validate", data("not_json.json")}).code == 2);
  CHECK(invoke({"validate", "-", "-"}, model.out).code == 2);

  std::istringstream in;
  std::ostringstream out, err;
  int code = cli::main_entry({"ocdf", "validate", data("bad_df.json")}, in, out, err, true);
  CHECK(code == 1);
  CHECK(out.str().rfind("\x1b[31mE_DF_ENDPOINT\x1b[0m", 0) == 0);
}

TEST_CASE("validate --pass forwards clean models") {
  Run model = invoke({"extract", corpus("cache.moo")});
  Run pass = invoke({"validate", "--pass", "-"}, model.out);
  CHECK(pass.code == 0);
  CHECK(pass.out == model.out);
  Run bad = invoke({"validate", "--pass", data("bad_df.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("E_DF_ENDPOINT") != std::string::npos);
}

TEST_CASE("multiple inputs keep order and report the worst exit code") {
  Run r = invoke({"validate", data("bad_df.json"), data("bad_df.json")});
  CHECK(r.code == 1);
  CHECK(count_lines(r.out) == 2);

  Run a = invoke({"extract", corpus("counter.moo"), corpus("cache.moo"), corpus("stats.moo")});
  CHECK(a.code == 0);
  auto first = a.out.find("\"Counter\"");
  auto second = a.out.find("\"FileCache\"");
  auto third = a.out.find("\"Stats\"");
  CHECK(first < second);
  CHECK(second < third);
  CHECK(count_lines(a.out) == 3);
}

TEST_CASE("render levels match the flow oracle on every corpus class") {
  for (const auto& entry : load_corpus()) {
    CAPTURE(entry.class_name);
    Run model = invoke({"extract", "--class", entry.class_name, entry.file});
    REQUIRE(model.code == 0);
    auto parsed = deserialize(model.out);
    REQUIRE(parsed.ok());
    const OcdfClass& cls = parsed->classes[0];
    for (int level = 1; level <= 3; ++level) {
      Run dot = invoke({"render", "--level", "L" + std::to_string(level), "-"}, model.out);
      REQUIRE(dot.code == 0);
      auto graph = parse_dot(dot.out);
      REQUIRE(std::holds_alternative<DotGraph>(graph));
      std::set<std::pair<std::string, std::string>> edges, expected;
      for (const auto& e : std::get<DotGraph>(graph).edges) edges.emplace(e.from, e.to);
      for (const auto& [kind, s, t] : expected_level_flows(cls, level)) expected.emplace(sanitize_id(s), sanitize_id(t));
      CHECK(edges == expected);
    }
  }
}

TEST_CASE("render options and selection") {
  Run lazy = invoke({"extract", "--lazy", "--class", "Account", corpus("account.moo")});
  REQUIRE(lazy.code == 0);
  Run shown = invoke({"render", "-"}, lazy.out);
  Run hidden = invoke({"render", "--no-inherited", "--rankdir", "left_right", "-"}, lazy.out);
  CHECK(shown.out.find("Ledger__store") != std::string::npos);
  CHECK(hidden.out.find("Ledger__store") == std::string::npos);
  CHECK(hidden.out.find("rankdir=LR;") != std::string::npos);
  CHECK(invoke({"render", "--level", "L9", "-"}, lazy.out).code == 2);
  CHECK(invoke({"render", "--class", "Nope", "-"}, lazy.out).code == 2);

  Run two = invoke({"extract", corpus("counter.moo")});
  auto model = deserialize(two.out);
  REQUIRE(model.ok());
  model->classes.push_back(model->classes[0]);
  model->classes[1].name = "Other";
  std::string doc = serialize(*model);
  CHECK(invoke({"render", "-"}, doc).code == 2);
  CHECK(invoke({"render", "--class", "Other", "-"}, doc).code == 0);
}

TEST_CASE("render -o writes a file") {
  auto path = std::filesystem::temp_directory_path() / "ocdf_cli_render_test.dot";
  Run model = invoke({"extract", corpus("counter.moo")});
  Run r = invoke({"render", "-o", path.string(), "-"}, model.out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(path.string()) == invoke({"render", "-"}, model.out).out);
  std::filesystem::remove(path);
}

TEST_CASE("analyze reports") {
  Run model = invoke({"extract", corpus("cache.moo")});
  Run text = invoke({"analyze", "-"}, model.out);
  CHECK(text.code == 0);
  CHECK(text.out.rfind("class FileCache\n  substructures: ", 0) == 0);
  CHECK(text.out.find("race hazards: ") != std::string::npos);

  Run j = invoke({"analyze", "--format", "json", "--level", "L2", "-"}, model.out);
  CHECK(j.code == 0);
  auto arr = nlohmann::json::parse(j.out);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["class"] == "FileCache");
  CHECK(arr[0]["substructures"]["components"].is_array());
  CHECK(arr[0]["race_hazards"].is_array());

  Run bad = invoke({"analyze", data("bad_df.json")});
  CHECK(bad.code == 0);
  CHECK(invoke({"analyze", data("not_json.json")}).code == 2);
}

#include <doctest.h>

#include "support/builders.hpp"
#include "support/dot_check.hpp"
#include "support/oracles.hpp"

using namespace ocdf;
using namespace ocdf::testing;

TEST_CASE("dot checker accepts the emitted subset") {
  const char* ok[] = {
      "digraph { }",
      "digraph \"g\" { a; b [shape=box]; a -> b [style=dashed]; }",
      "graph G { a -- b -- c }",
      "digraph { subgraph cluster_x { label=\"x\"; n1 } n1 -> n2 }",
      "digraph { node [shape=box]; a [label=<<U>x &amp; y</U>>]; }",
      "strict digraph { a -> { b c } }",
      "digraph {\n// comment\n/* block */ a -> b:n }",
  };
  for (const char* text : ok) {
    CAPTURE(text);
    CHECK(std::holds_alternative<DotGraph>(parse_dot(text)));
  }
}

TEST_CASE("dot checker rejects malformed input") {
  const char* bad[] = {
      "",
      "digraph {",
      "digraph { a -> }",
      "graph { a -> b }",
      "digraph { a -- b }",
      "digraph { a [shape] }",
      "digraph { a [label=\"open] }",
      "digraph { 1abc; }",
      "digraph { a [label=<<U>x</U>] }",
      "digraph { } trailing",
      "digraph { node; }",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK(std::holds_alternative<std::string>(parse_dot(text)));
  }
}

TEST_CASE("dot checker expands edge chains and subgraph operands") {
  auto g = std::get<DotGraph>(parse_dot("digraph { a -> b -> c; a -> { d e } }"));
  CHECK(g.edges.size() == 4);
}

TEST_CASE("quick-find oracle on a hand-built graph") {
  OcdfClass c{"C", {member("a"), method("f"), method("g"), member("b"), member("z")},
              {data("a", "f"), control("g", "f"), data("g", "b")}};
  CHECK(naive_components(c) == Partition{{"a", "b", "f", "g"}, {"z"}});
}

TEST_CASE("exhaustive race oracle on a hand-built class") {
  OcdfClass c{"C", {member("x"), iface("A"), iface("B"), method("f"), method("g")},
              {control("A", "f"), control("B", "g"), data("f", "x"), data("g", "x")}};
  CHECK(exhaustive_race_members(c) == std::set<std::string>{"x"});
  c.flows[1] = control("A", "g");
  CHECK(exhaustive_race_members(c).empty());
}

#include "support/dot_check.hpp"

#include <cctype>
#include <stdexcept>

namespace ocdf::testing {

namespace {

enum class T { Id, Punct, Arrow, End };

struct Tok {
  T kind = T::End;
  std::string text;
  bool keyword = false;
  int line = 1;
  int col = 1;
};

struct DotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool is_kw(const std::string& s) {
  auto l = lower(s);
  return l == "node" || l == "edge" || l == "graph" || l == "digraph" || l == "subgraph" ||
         l == "strict";
}

std::vector<Tok> lex(std::string_view s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto bump = [&]() {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto fail = [&](const std::string& what) {
    throw DotError(std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump();
      continue;
    }
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
      while (i < s.size() && s[i] != '\n') bump();
      continue;
    }
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      bump();
      bump();
      while (i + 1 < s.size() && !(s[i] == '*' && s[i + 1] == '/')) bump();
      if (i + 1 >= s.size()) fail("unterminated comment");
      bump();
      bump();
      continue;
    }
    if (c == '#' && col == 1) {
      while (i < s.size() && s[i] != '\n') bump();
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
        static_cast<unsigned char>(c) >= 0x80) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                              static_cast<unsigned char>(s[i]) >= 0x80)) {
        t.text += s[i];
        bump();
      }
      t.kind = T::Id;
      t.keyword = is_kw(t.text);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
               (c == '-' && i + 1 < s.size() &&
                (std::isdigit(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '.'))) {
      if (c == '-') {
        t.text += c;
        bump();
      }
      bool dot = false;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || (s[i] == '.' && !dot))) {
        dot = dot || s[i] == '.';
        t.text += s[i];
        bump();
      }
      if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        fail("identifier may not start with a digit");
      }
      t.kind = T::Id;
    } else if (c == '"') {
      bump();
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\' && i + 1 < s.size()) {
          t.text += s[i];
          bump();
        }
        t.text += s[i];
        bump();
      }
      if (i >= s.size()) fail("unterminated string");
      bump();
      t.kind = T::Id;
    } else if (c == '<') {
      int depth = 0;
      do {
        if (s[i] == '<') ++depth;
        if (s[i] == '>') --depth;
        t.text += s[i];
        bump();
      } while (i < s.size() && depth > 0);
      if (depth != 0) fail("unbalanced HTML string");
      t.kind = T::Id;
    } else if (c == '-' && i + 1 < s.size() && (s[i + 1] == '>' || s[i + 1] == '-')) {
      t.text = s.substr(i, 2);
      bump();
      bump();
      t.kind = T::Arrow;
    } else if (std::string_view("{}[]=;,:").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      bump();
      t.kind = T::Punct;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Tok end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  DotGraph graph() {
    if (kw("strict")) take();
    if (kw("digraph")) {
      g_.directed = true;
    } else if (!kw("graph")) {
      fail("expected 'graph' or 'digraph'");
    }
    take();
    if (plain_id()) g_.name = take().text;
    expect("{");
    stmt_list();
    expect("}");
    if (peek().kind != T::End) fail("trailing input after graph");
    return g_;
  }

 private:
  const Tok& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Tok& take() {
    const Tok& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == T::Punct && peek(k).text == p;
  }
  bool kw(std::string_view k, std::size_t a = 0) const {
    return peek(a).kind == T::Id && peek(a).keyword && lower(peek(a).text) == k;
  }
  bool plain_id(std::size_t k = 0) const { return peek(k).kind == T::Id && !peek(k).keyword; }
  [[noreturn]] void fail(const std::string& what) const {
    throw DotError(std::to_string(peek().line) + ":" + std::to_string(peek().col) + ": " + what);
  }
  void expect(std::string_view p) {
    if (!punct(p)) fail("expected '" + std::string(p) + "'");
    take();
  }
  std::string id() {
    if (!plain_id()) fail("expected an ID");
    return take().text;
  }

  void stmt_list() {
    while (!punct("}")) {
      if (peek().kind == T::End) fail("unexpected end of input");
      stmt();
      if (punct(";")) take();
    }
  }

  std::map<std::string, std::string> attr_lists() {
    std::map<std::string, std::string> attrs;
    while (punct("[")) {
      take();
      while (!punct("]")) {
        std::string key = id();
        expect("=");
        attrs[key] = id();
        if (punct(",") || punct(";")) take();
      }
      take();
    }
    return attrs;
  }

  std::string node_id() {
    std::string n = id();
    if (punct(":")) {
      take();
      id();
      if (punct(":")) {
        take();
        id();
      }
    }
    return n;
  }

  // Returns node ids the subgraph or node operand stands for.
  std::vector<std::string> operand() {
    if (kw("subgraph") || punct("{")) return subgraph();
    return {node_id()};
  }

  std::vector<std::string> subgraph() {
    std::string name;
    if (kw("subgraph")) {
      take();
      if (plain_id()) name = take().text;
    }
    g_.subgraphs.push_back(name);
    std::size_t first_node = g_.nodes.size();
    expect("{");
    stmt_list();
    expect("}");
    std::vector<std::string> ids;
    for (std::size_t i = first_node; i < g_.nodes.size(); ++i) ids.push_back(g_.nodes[i].id);
    return ids;
  }

  void stmt() {
    if (kw("graph") || kw("node") || kw("edge")) {
      take();
      if (!punct("[")) fail("expected attribute list");
      attr_lists();
      return;
    }
    if (plain_id() && punct("=", 1)) {
      take();
      take();
      id();
      return;
    }
    bool is_subgraph = kw("subgraph") || punct("{");
    auto left = operand();
    if (peek().kind != T::Arrow) {
      if (is_subgraph) return;
      g_.nodes.push_back({left.front(), attr_lists()});
      return;
    }
    std::vector<std::vector<std::string>> chain{left};
    while (peek().kind == T::Arrow) {
      std::string op = take().text;
      if (op == "->" && !g_.directed) fail("'->' in an undirected graph");
      if (op == "--" && g_.directed) fail("'--' in a directed graph");
      chain.push_back(operand());
    }
    auto attrs = attr_lists();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      for (const auto& a : chain[i]) {
        for (const auto& b : chain[i + 1]) g_.edges.push_back({a, b, attrs});
      }
    }
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  DotGraph g_;
};

}  // namespace

std::variant<DotGraph, std::string> parse_dot(std::string_view text) {
  try {
    return Reader(lex(text)).graph();
  } catch (const DotError& e) {
    return std::string(e.what());
  }
}

}  // namespace ocdf::testing

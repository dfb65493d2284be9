#include <cctype>

#include "ocdf/minioo.hpp"

namespace ocdf::minioo {

SourceSpan Expr::span() const {
  return std::visit([](const auto& n) { return n.span; }, node);
}

const FieldDecl* ClassDecl::find_field(std::string_view field) const {
  for (const auto& m : members) {
    if (const auto* f = std::get_if<FieldDecl>(&m); f && f->name == field) return f;
  }
  return nullptr;
}

const MethodDecl* ClassDecl::find_method(std::string_view method) const {
  for (const auto& m : members) {
    if (const auto* f = std::get_if<MethodDecl>(&m); f && f->name == method) return f;
  }
  return nullptr;
}

std::size_t ClassDecl::field_count() const {
  std::size_t n = 0;
  for (const auto& m : members) n += std::holds_alternative<FieldDecl>(m);
  return n;
}

std::size_t ClassDecl::method_count() const { return members.size() - field_count(); }

const ClassDecl* Program::find(std::string_view class_name) const {
  for (const auto& c : classes) {
    if (c.name == class_name) return &c;
  }
  return nullptr;
}

namespace {

enum class Tok { Ident, Keyword, Int, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

bool is_keyword(std::string_view word) {
  static constexpr std::string_view kKeywords[] = {"class",  "public", "protected", "private",
                                                   "static", "const",  "return",    "this"};
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run(std::vector<Diagnostic>& errors) {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      SourceSpan at{line_, column_};
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "end of input", at});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          advance();
        }
        std::string word(src_.substr(start, pos_ - start));
        out.push_back({is_keyword(word) ? Tok::Keyword : Tok::Ident, std::move(word), at});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        if (pos_ < src_.size() &&
            (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          errors.push_back(make_error_at(Code::Parse, "malformed integer literal", at));
          while (pos_ < src_.size() &&
                 (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            advance();
          }
          continue;
        }
        out.push_back({Tok::Int, std::string(src_.substr(start, pos_ - start)), at});
      } else if (c == '"') {
        lex_string(at, out, errors);
      } else if (std::string_view("{}():;,.=").find(c) != std::string_view::npos) {
        advance();
        out.push_back({Tok::Punct, std::string(1, c), at});
      } else {
        errors.push_back(make_error_at(Code::Parse, "unexpected character", at));
        advance();
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_string(SourceSpan at, std::vector<Token>& out, std::vector<Diagnostic>& errors) {
    advance();
    std::string value;
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
        advance();
        switch (src_[pos_]) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default:
            errors.push_back(make_error_at(Code::Parse, "unknown escape sequence",
                                           SourceSpan{line_, column_ - 1}));
        }
        advance();
        continue;
      }
      value += src_[pos_];
      advance();
    }
    if (pos_ >= src_.size() || src_[pos_] != '"') {
      errors.push_back(make_error_at(Code::Parse, "unterminated string literal", at));
      return;
    }
    advance();
    out.push_back({Tok::String, std::move(value), at});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct SyntaxError {
  Diagnostic diagnostic;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    Program prog;
    while (peek().kind != Tok::End) prog.classes.push_back(class_decl());
    return prog;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  bool at(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return (t.kind == Tok::Punct || t.kind == Tok::Keyword) && t.text == text;
  }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError{make_error_at(Code::Parse, "expected " + expected + " but found " + found, t.span)};
  }

  const Token& expect(std::string_view text) {
    if (!at(text)) fail("'" + std::string(text) + "'");
    return take();
  }

  const Token& ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(what);
    return take();
  }

  ClassDecl class_decl() {
    ClassDecl cls;
    cls.span = expect("class").span;
    cls.name = ident("class name").text;
    if (at(":")) {
      take();
      const Token& parent = ident("parent class name");
      cls.parent = parent.text;
      cls.parent_span = parent.span;
    }
    expect("{");
    while (!at("}")) {
      if (peek().kind == Tok::End) fail("'}'");
      cls.members.push_back(member(cls.name));
    }
    take();
    return cls;
  }

  Visibility visibility() {
    if (at("public")) { take(); return Visibility::Public; }
    if (at("protected")) { take(); return Visibility::Protected; }
    if (at("private")) { take(); return Visibility::Private; }
    fail("visibility (public, protected or private)");
  }

  MemberDecl member(const std::string& class_name) {
    SourceSpan span = peek().span;
    Visibility vis = visibility();
    bool is_static = false;
    bool is_const = false;
    if (at("static")) { take(); is_static = true; }
    if (at("const")) { take(); is_const = true; }
    const Token& type = ident("type name");

    if (!is_const && at("(") && type.text == class_name) {
      MethodDecl m;
      m.visibility = vis;
      m.is_static = is_static;
      m.name = type.text;
      m.span = span;
      method_rest(m);
      return m;
    }

    const Token& name = ident("member name");
    if (at(";")) {
      take();
      return FieldDecl{vis, is_static, is_const, type.text, name.text, span};
    }
    if (at("(")) {
      if (is_const) fail("';' after const field");
      MethodDecl m;
      m.visibility = vis;
      m.is_static = is_static;
      m.return_type = type.text;
      m.name = name.text;
      m.span = span;
      method_rest(m);
      return m;
    }
    fail("';' or '('");
  }

  void method_rest(MethodDecl& m) {
    expect("(");
    if (!at(")")) {
      do {
        Param p;
        const Token& type = ident("parameter type");
        p.type = type.text;
        p.span = type.span;
        p.name = ident("parameter name").text;
        m.params.push_back(std::move(p));
      } while (at(",") && (take(), true));
    }
    expect(")");
    expect("{");
    while (!at("}")) {
      if (peek().kind == Tok::End) fail("'}'");
      m.body.push_back(statement());
    }
    take();
  }

  Stmt statement() {
    SourceSpan span = peek().span;
    if (at("return")) {
      take();
      Return r;
      r.span = span;
      if (!at(";")) r.value = expr();
      expect(";");
      return r;
    }
    bool qualified = false;
    if (at("this")) {
      take();
      expect(".");
      qualified = true;
    }
    const Token& first = ident(qualified ? "member name after 'this.'" : "statement");
    if (!qualified && peek().kind == Tok::Ident) {
      LocalDecl d;
      d.type = first.text;
      d.name = take().text;
      d.span = span;
      if (at("=")) {
        take();
        d.init = expr();
      }
      expect(";");
      return d;
    }
    if (at("=")) {
      take();
      Assign a{NameRef{qualified, first.text, span}, expr(), span};
      expect(";");
      return a;
    }
    if (at("(")) {
      CallStmt c{call_rest(qualified, first.text, span), span};
      expect(";");
      return c;
    }
    fail(qualified ? "'=' or '('" : "a local name, '=' or '('");
  }

  Call call_rest(bool qualified, std::string name, SourceSpan span) {
    Call c;
    c.this_qualified = qualified;
    c.name = std::move(name);
    c.span = span;
    expect("(");
    if (!at(")")) {
      do {
        c.args.push_back(expr());
      } while (at(",") && (take(), true));
    }
    expect(")");
    return c;
  }

  Expr expr() {
    const Token& t = peek();
    SourceSpan span = t.span;
    if (t.kind == Tok::Int) return Expr{IntLit{take().text, span}};
    if (t.kind == Tok::String) return Expr{StringLit{take().text, span}};
    bool qualified = false;
    if (at("this")) {
      take();
      expect(".");
      qualified = true;
    }
    const Token& name = ident("expression");
    if (at("(")) return Expr{call_rest(qualified, name.text, span)};
    return Expr{NameRef{qualified, name.text, span}};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Result<Program> parse(std::string_view source) {
  std::vector<Diagnostic> errors;
  auto tokens = Lexer(source).run(errors);
  if (!errors.empty()) return errors;
  try {
    return Parser(std::move(tokens)).program();
  } catch (const SyntaxError& e) {
    return e.diagnostic;
  }
}

}  // namespace ocdf::minioo

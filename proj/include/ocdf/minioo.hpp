#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ocdf/diagnostic.hpp"
#include "ocdf/model.hpp"

// MiniOO: a small class-based language used as the extraction source.
//
//   program    = { class_decl } ;
//   class_decl = "class" IDENT [ ":" IDENT ] "{" { member } "}" ;
//   member     = field_decl | method_decl ;
//   field_decl = vis [ "static" ] [ "const" ] type IDENT ";" ;
//   method_decl= vis [ "static" ] [ type ] IDENT "(" [ param { "," param } ] ")" block ;
//   param      = type IDENT ;
//   block      = "{" { stmt } "}" ;
//   stmt       = type IDENT [ "=" expr ] ";"
//              | lvalue "=" expr ";"
//              | call ";"
//              | "return" [ expr ] ";" ;
//   lvalue     = [ "this" "." ] IDENT ;
//   expr       = call | lvalue | INT | STRING ;
//   call       = [ "this" "." ] IDENT "(" [ expr { "," expr } ] ")" ;
//   vis        = "public" | "protected" | "private" ;
//   type       = IDENT ;
//
// The return type of a method may be omitted only for a constructor, i.e.
// when the method is named after its class.
namespace ocdf::minioo {

struct NameRef {
  bool this_qualified = false;
  std::string name;
  SourceSpan span;
};

struct IntLit {
  std::string text;
  SourceSpan span;
};

struct StringLit {
  std::string value;
  SourceSpan span;
};

struct Expr;

struct Call {
  bool this_qualified = false;
  std::string name;
  std::vector<Expr> args;
  SourceSpan span;
};

struct Expr {
  std::variant<NameRef, Call, IntLit, StringLit> node;

  SourceSpan span() const;
};

struct LocalDecl {
  std::string type;
  std::string name;
  std::optional<Expr> init;
  SourceSpan span;
};

struct Assign {
  NameRef target;
  Expr value;
  SourceSpan span;
};

struct CallStmt {
  Call call;
  SourceSpan span;
};

struct Return {
  std::optional<Expr> value;
  SourceSpan span;
};

using Stmt = std::variant<LocalDecl, Assign, CallStmt, Return>;

struct Param {
  std::string type;
  std::string name;
  SourceSpan span;
};

struct FieldDecl {
  Visibility visibility = Visibility::Private;
  bool is_static = false;
  bool is_const = false;
  std::string type;
  std::string name;
  SourceSpan span;
};

struct MethodDecl {
  Visibility visibility = Visibility::Private;
  bool is_static = false;
  std::optional<std::string> return_type;
  std::string name;
  std::vector<Param> params;
  std::vector<Stmt> body;
  SourceSpan span;
};

using MemberDecl = std::variant<FieldDecl, MethodDecl>;

struct ClassDecl {
  std::string name;
  std::optional<std::string> parent;
  SourceSpan parent_span;
  std::vector<MemberDecl> members;  // declaration order
  SourceSpan span;

  const FieldDecl* find_field(std::string_view name) const;
  const MethodDecl* find_method(std::string_view name) const;
  std::size_t field_count() const;
  std::size_t method_count() const;
};

struct Program {
  std::vector<ClassDecl> classes;

  const ClassDecl* find(std::string_view name) const;
};

Result<Program> parse(std::string_view source);

/// Parent chain of `class_name`, the class itself first.
Result<std::vector<const ClassDecl*>> ancestry(const Program& program, std::string_view class_name);

/// UML-style signature text, e.g. "calc(v : int) : int".
std::string signature(const MethodDecl& method);

/// Lowers one class to an OCDF class. Flows that touch inherited features
/// are left out.
Result<OcdfClass> extract(const Program& program, std::string_view class_name);

/// As extract, but every ancestor feature referenced from the class's own
/// bodies is added with inherited=true (id "Owner::name") along with the
/// flows that touch it.
Result<OcdfClass> extract_lazy_inherited(const Program& program, std::string_view class_name);

}  // namespace ocdf::minioo

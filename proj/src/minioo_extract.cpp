#include <set>
#include <unordered_set>

#include "ocdf/minioo.hpp"

namespace ocdf::minioo {

std::string signature(const MethodDecl& method) {
  std::string out = method.name + "(";
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    if (i) out += ", ";
    out += method.params[i].name + " : " + method.params[i].type;
  }
  out += ")";
  if (method.return_type) out += " : " + *method.return_type;
  return out;
}

Result<std::vector<const ClassDecl*>> ancestry(const Program& program, std::string_view class_name) {
  const ClassDecl* cls = program.find(class_name);
  if (!cls) {
    return make_error(Code::NoClass, "no class named '" + std::string(class_name) + "' in source");
  }
  std::vector<const ClassDecl*> chain{cls};
  std::unordered_set<std::string_view> seen{cls->name};
  while (chain.back()->parent) {
    const ClassDecl& child = *chain.back();
    const ClassDecl* parent = program.find(*child.parent);
    if (!parent) {
      return make_error_at(Code::Resolve, "unknown parent class '" + *child.parent + "'",
                           child.parent_span);
    }
    if (!seen.insert(parent->name).second) {
      Diagnostic d = make_error_at(Code::InheritCycle,
                                   "inheritance cycle through class '" + parent->name + "'",
                                   child.parent_span);
      d.class_name = std::string(class_name);
      return d;
    }
    chain.push_back(parent);
  }
  return chain;
}

namespace {

Feature field_feature(const FieldDecl& f) {
  Feature out;
  out.id = f.name;
  out.kind = FeatureKind::Member;
  out.name = f.name;
  out.decl = f.type;
  out.visibility = f.visibility;
  out.is_static = f.is_static;
  out.is_const = f.is_const;
  return out;
}

Feature method_feature(const MethodDecl& m, const ClassDecl& owner) {
  Feature out;
  out.id = m.name;
  out.kind = m.visibility == Visibility::Public ? FeatureKind::InterfaceMethod : FeatureKind::Method;
  out.name = m.name;
  out.decl = signature(m);
  out.visibility = m.visibility;
  out.is_static = m.is_static;
  out.is_constructor = m.name == owner.name;
  return out;
}

// Walks the bodies of chain[0] and records one flow per read, write and call
// event. Inherited endpoints are named "Owner::name".
class Lowering {
 public:
  explicit Lowering(const std::vector<const ClassDecl*>& chain) : chain_(chain) {}

  std::vector<Diagnostic> errors;
  std::vector<Flow> flows;
  // (chain index, member name) of every ancestor feature the bodies touch.
  std::set<std::pair<std::size_t, std::string>> inherited_fields;
  std::set<std::pair<std::size_t, std::string>> inherited_methods;

  void method(const MethodDecl& m) {
    current_ = m.name;
    locals_.clear();
    for (const auto& p : m.params) declare(p.name, p.span);
    for (const auto& stmt : m.body) statement(stmt);
  }

  std::string feature_id(std::size_t owner, const std::string& name) const {
    return owner == 0 ? name : chain_[owner]->name + "::" + name;
  }

 private:
  void declare(const std::string& name, SourceSpan span) {
    if (!locals_.insert(name).second) {
      errors.push_back(make_error_at(Code::Resolve, "'" + name + "' is already declared in '" +
                                                        current_ + "'",
                                     span));
    }
  }

  std::optional<std::size_t> field_owner(const std::string& name) {
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      if (chain_[i]->find_field(name)) {
        if (i > 0) inherited_fields.emplace(i, name);
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> method_owner(const std::string& name) {
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      if (chain_[i]->find_method(name)) {
        if (i > 0) inherited_methods.emplace(i, name);
        return i;
      }
    }
    return std::nullopt;
  }

  // Returns the field feature id a name refers to, or nullopt for locals.
  std::optional<std::string> value_ref(const NameRef& ref) {
    if (!ref.this_qualified && locals_.count(ref.name)) return std::nullopt;
    if (auto owner = field_owner(ref.name)) return feature_id(*owner, ref.name);
    errors.push_back(make_error_at(
        Code::Resolve,
        "unresolved name '" + std::string(ref.this_qualified ? "this." : "") + ref.name + "' in '" +
            current_ + "'",
        ref.span));
    return std::nullopt;
  }

  void add(FlowKind kind, std::string source, std::string target) {
    flows.push_back(Flow{kind, std::move(source), std::move(target), std::nullopt});
  }

  void call(const Call& c, bool consumed) {
    auto owner = method_owner(c.name);
    if (!owner) {
      errors.push_back(make_error_at(Code::Resolve,
                                     "unresolved method '" + c.name + "' called in '" + current_ + "'",
                                     c.span));
    } else {
      add(FlowKind::Control, current_, feature_id(*owner, c.name));
    }
    for (const auto& arg : c.args) expr(arg);
    if (!owner) return;
    std::string callee = feature_id(*owner, c.name);
    if (!c.args.empty()) add(FlowKind::Data, current_, callee);
    if (consumed) add(FlowKind::Data, callee, current_);
  }

  // Every expression position in MiniOO consumes its value.
  void expr(const Expr& e) {
    if (const auto* ref = std::get_if<NameRef>(&e.node)) {
      if (auto field = value_ref(*ref)) add(FlowKind::Data, *field, current_);
    } else if (const auto* c = std::get_if<Call>(&e.node)) {
      call(*c, true);
    }
  }

  void statement(const Stmt& stmt) {
    if (const auto* d = std::get_if<LocalDecl>(&stmt)) {
      if (d->init) expr(*d->init);
      declare(d->name, d->span);
    } else if (const auto* a = std::get_if<Assign>(&stmt)) {
      expr(a->value);
      if (auto field = value_ref(a->target)) add(FlowKind::Data, current_, *field);
    } else if (const auto* c = std::get_if<CallStmt>(&stmt)) {
      call(c->call, false);
    } else if (const auto* r = std::get_if<Return>(&stmt)) {
      if (r->value) expr(*r->value);
    }
  }

  const std::vector<const ClassDecl*>& chain_;
  std::string current_;
  std::unordered_set<std::string> locals_;
};

Result<OcdfClass> lower(const Program& program, std::string_view class_name, bool lazy) {
  auto chain_result = ancestry(program, class_name);
  if (!chain_result) return chain_result.errors();
  const auto& chain = chain_result.value();
  const ClassDecl& cls = *chain.front();

  std::vector<Diagnostic> errors;
  std::size_t declared = 0;
  for (const auto& c : program.classes) declared += c.name == cls.name;
  if (declared > 1) {
    errors.push_back(make_error_at(Code::Resolve, "class '" + cls.name + "' is declared more than once",
                                   cls.span));
  }

  std::vector<Feature> features;
  std::unordered_set<std::string> names;
  for (const auto& member : cls.members) {
    const std::string& name = std::visit([](const auto& m) -> const std::string& { return m.name; }, member);
    SourceSpan span = std::visit([](const auto& m) { return m.span; }, member);
    if (!names.insert(name).second) {
      errors.push_back(make_error_at(Code::Resolve,
                                     "member '" + name + "' is declared more than once in '" +
                                         cls.name + "'",
                                     span));
    }
  }

  Lowering lowering(chain);
  for (const auto& member : cls.members) {
    if (const auto* f = std::get_if<FieldDecl>(&member)) {
      features.push_back(field_feature(*f));
    } else {
      const auto& m = std::get<MethodDecl>(member);
      features.push_back(method_feature(m, cls));
      lowering.method(m);
    }
  }
  errors.insert(errors.end(), lowering.errors.begin(), lowering.errors.end());
  if (!errors.empty()) {
    for (auto& e : errors) e.class_name = cls.name;
    return errors;
  }

  std::vector<Flow> flows;
  if (lazy) {
    for (std::size_t owner = 1; owner < chain.size(); ++owner) {
      for (const auto& member : chain[owner]->members) {
        if (const auto* f = std::get_if<FieldDecl>(&member)) {
          if (!lowering.inherited_fields.count({owner, f->name})) continue;
          Feature feat = field_feature(*f);
          feat.id = lowering.feature_id(owner, f->name);
          feat.inherited = true;
          features.push_back(std::move(feat));
        } else {
          const auto& m = std::get<MethodDecl>(member);
          if (!lowering.inherited_methods.count({owner, m.name})) continue;
          Feature feat = method_feature(m, *chain[owner]);
          feat.id = lowering.feature_id(owner, m.name);
          feat.inherited = true;
          features.push_back(std::move(feat));
        }
      }
    }
    flows = std::move(lowering.flows);
  } else {
    for (auto& flow : lowering.flows) {
      if (names.count(flow.source) && names.count(flow.target)) flows.push_back(std::move(flow));
    }
  }
  return build_class(cls.name, std::move(features), std::move(flows));
}

}  // namespace

Result<OcdfClass> extract(const Program& program, std::string_view class_name) {
  return lower(program, class_name, false);
}

Result<OcdfClass> extract_lazy_inherited(const Program& program, std::string_view class_name) {
  return lower(program, class_name, true);
}

}  // namespace ocdf::minioo

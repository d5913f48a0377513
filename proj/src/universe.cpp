#include "codb/universe.hpp"

#include "codb/errors.hpp"

namespace codb {

std::string ValidationError::to_string() const {
  return std::string(kind == Kind::Shape ? "ShapeError" : "RelevanceError") + " at " + path + ": " + message;
}

namespace {

struct Invalid {
  ValidationError error;
};

[[noreturn]] void shape(const std::string& path, const std::string& message) {
  throw Invalid{ValidationError{ValidationError::Kind::Shape, path, message}};
}

[[noreturn]] void relevance(const std::string& path, const std::string& message) {
  throw Invalid{ValidationError{ValidationError::Kind::Relevance, path, message}};
}

// ---------------------------------------------------------------------------
// de Bruijn validation

void check_db_body(const Syntax& syntax, const Desc& desc, const TermDB& t, const Scope& kz, const std::string& path);

void check_db_term(const Syntax& syntax, const TermDB& t, const Scope& kz, const Sort& sort, const std::string& path) {
  if (!t) shape(path, "missing term");
  if (const auto* v = std::get_if<DbVar>(&t->value)) {
    if (v->index >= kz.size()) {
      shape(path, "variable " + std::to_string(v->index) + " out of range for a scope of " + std::to_string(kz.size()));
    }
    const Kind& k = kz[v->index];
    if (!(k.sort == sort)) shape(path, "variable of sort " + k.sort.name + " where " + sort.name + " is expected");
    check_db_body(syntax, *spine_desc(k.scope), v->spine, kz, path + "/var.spine");
    return;
  }
  if (const auto* c = std::get_if<DbCon>(&t->value)) {
    if (!syntax.has(sort)) shape(path, "no description for sort " + sort.name);
    check_db_body(syntax, syntax.at(sort), c->body, kz, path + "/con");
    return;
  }
  shape(path, "expected a variable or a construct");
}

void check_db_body(const Syntax& syntax, const Desc& desc, const TermDB& t, const Scope& kz, const std::string& path) {
  if (!t) shape(path, "missing body");
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    const auto* rec = std::get_if<DbRec>(&t->value);
    if (rec == nullptr) shape(path, "expected a subterm");
    check_db_term(syntax, rec->term, concat(kz, r->kind.scope), r->kind.sort, path + "/rec");
  } else if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    const auto* tag = std::get_if<DbTag>(&t->value);
    if (tag == nullptr) shape(path, "expected a tag");
    auto arm = s->arms.find(tag->tag);
    if (!s->tags.contains(tag->tag) || arm == s->arms.end()) shape(path, "unknown tag " + tag->tag);
    check_db_body(syntax, *arm->second, tag->body, kz, path + "/" + tag->tag);
  } else if (std::holds_alternative<Desc::One>(desc.node)) {
    if (!std::holds_alternative<DbUnit>(t->value)) shape(path, "expected unit");
  } else {
    const auto& times = std::get<Desc::Times>(desc.node);
    const auto* pair = std::get_if<DbPair>(&t->value);
    if (pair == nullptr) shape(path, "expected a pair");
    check_db_body(syntax, *times.left, pair->left, kz, path + "/pair.left");
    check_db_body(syntax, *times.right, pair->right, kz, path + "/pair.right");
  }
}

// ---------------------------------------------------------------------------
// co-de-Bruijn validation. Each check returns the support its node uses
// within the scope it lives in; callers holding a Relev demand all of it.

BitVec check_r_body(const Syntax& syntax, const Desc& desc, const NodePtr& node, const Scope& scope,
                    const std::string& path);

void check_relev_component(const Relev<NodePtr>& r, const Scope& ambient, const std::string& path) {
  if (!(r.thinning.target() == ambient)) shape(path, "component thinning " + r.thinning.to_string() + " has the wrong target");
}

void check_cover(const RPair& p, const Scope& scope, const std::string& path) {
  if (!(p.cover.covered() == scope)) shape(path, "cover has the wrong length");
  if (!p.cover.overlap_ok()) shape(path, "pair cover must permit overlap");
  const Thinning left = p.cover.left();
  const Thinning right = p.cover.right();
  for (std::size_t i = 0; i < scope.size(); ++i) {
    if (!p.left.thinning.selects(i) && !p.right.thinning.selects(i)) {
      relevance(path, "position " + std::to_string(i) + " is used by neither component");
    }
  }
  if (!(left == p.left.thinning)) {
    relevance(path, "cover " + p.cover.to_string() + " disagrees with left thinning " + p.left.thinning.to_string());
  }
  if (!(right == p.right.thinning)) {
    relevance(path, "cover " + p.cover.to_string() + " disagrees with right thinning " + p.right.thinning.to_string());
  }
}

void require_whole(const BitVec& used, const std::string& path) {
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used.test(i)) relevance(path, "support position " + std::to_string(i) + " is never used");
  }
}

BitVec check_r_term(const Syntax& syntax, const NodePtr& node, const Scope& scope, const Sort& sort,
                    const std::string& path) {
  if (!node) shape(path, "missing term");
  if (const auto* h = std::get_if<Hash>(&node->value)) {
    const RPair& p = h->pair;
    check_relev_component(p.left, scope, path + "/hash.var");
    check_relev_component(p.right, scope, path + "/hash.spine");
    if (!std::holds_alternative<VarLeaf>(p.left.thing->value)) shape(path + "/hash.var", "expected the variable leaf");
    if (p.left.thinning.source_size() != 1) {
      shape(path + "/hash.var", "variable support has " + std::to_string(p.left.thinning.source_size()) +
                                    " positions, not one");
    }
    const Kind& k = scope[p.left.thinning.bits().select(0)];
    if (!(k.sort == sort)) shape(path + "/hash.var", "variable of sort " + k.sort.name + " where " + sort.name + " is expected");
    const BitVec spine_used =
        check_r_body(syntax, *spine_desc(k.scope), p.right.thing, p.right.thinning.source(), path + "/hash.spine");
    require_whole(spine_used, path + "/hash.spine");
    check_cover(p, scope, path + "/hash");
    return p.left.thinning.bits() | p.right.thinning.bits();
  }
  if (const auto* c = std::get_if<Con>(&node->value)) {
    if (!syntax.has(sort)) shape(path, "no description for sort " + sort.name);
    return check_r_body(syntax, syntax.at(sort), c->body, scope, path + "/con");
  }
  shape(path, "expected a variable or a construct");
}

BitVec check_r_body(const Syntax& syntax, const Desc& desc, const NodePtr& node, const Scope& scope,
                    const std::string& path) {
  if (!node) shape(path, "missing body");
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    const auto* b = std::get_if<Bind>(&node->value);
    if (b == nullptr) shape(path, "expected a binding site");
    if (!(b->usage.target() == r->kind.scope)) shape(path + "/bind", "usage thinning does not match the bound scope");
    const Scope inner = concat(scope, b->usage.source());
    const BitVec used = check_r_term(syntax, b->body, inner, r->kind.sort, path + "/bind");
    require_whole(used, path + "/bind");
    return BitVec(scope.size(), true);
  }
  if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    const auto* tag = std::get_if<Tagged>(&node->value);
    if (tag == nullptr) shape(path, "expected a tag");
    auto arm = s->arms.find(tag->tag);
    if (!s->tags.contains(tag->tag) || arm == s->arms.end()) shape(path, "unknown tag " + tag->tag);
    return check_r_body(syntax, *arm->second, tag->body, scope, path + "/" + tag->tag);
  }
  if (std::holds_alternative<Desc::One>(desc.node)) {
    if (!std::holds_alternative<UnitLeaf>(node->value)) shape(path, "expected unit");
    if (!scope.empty()) relevance(path, "unit lives in a scope of " + std::to_string(scope.size()));
    return BitVec();
  }
  const auto& times = std::get<Desc::Times>(desc.node);
  const auto* p = std::get_if<RPair>(&node->value);
  if (p == nullptr) shape(path, "expected a pair");
  check_relev_component(p->left, scope, path + "/pair.left");
  check_relev_component(p->right, scope, path + "/pair.right");
  require_whole(check_r_body(syntax, *times.left, p->left.thing, p->left.thinning.source(), path + "/pair.left"),
                path + "/pair.left");
  require_whole(check_r_body(syntax, *times.right, p->right.thing, p->right.thinning.source(), path + "/pair.right"),
                path + "/pair.right");
  check_cover(*p, scope, path + "/pair");
  return p->left.thinning.bits() | p->right.thinning.bits();
}

// ---------------------------------------------------------------------------
// translations

Relev<NodePtr> codes(const Syntax& syntax, const Desc& desc, const TermDB& t, const Scope& kz, const std::string& path);

Relev<NodePtr> code_term(const Syntax& syntax, const TermDB& t, const Scope& kz, const Sort& sort,
                         const std::string& path) {
  if (!t) throw ShapeError(path, "missing term");
  if (const auto* v = std::get_if<DbVar>(&t->value)) {
    if (v->index >= kz.size()) throw ShapeError(path, "variable out of range");
    const Kind& k = kz[v->index];
    if (!(k.sort == sort)) throw ShapeError(path, "variable of the wrong sort");
    Relev<RPair> pair = rpair(rvar(point(kz, v->index)), codes(syntax, *spine_desc(k.scope), v->spine, kz, path));
    return map_relev([](const RPair& p) { return make_node(Hash{p}); }, pair);
  }
  if (const auto* c = std::get_if<DbCon>(&t->value)) {
    Relev<NodePtr> body = codes(syntax, syntax.at(sort), c->body, kz, path + "/con");
    return map_relev([](const NodePtr& b) { return make_node(Con{b}); }, body);
  }
  throw ShapeError(path, "expected a variable or a construct");
}

Relev<NodePtr> codes(const Syntax& syntax, const Desc& desc, const TermDB& t, const Scope& kz, const std::string& path) {
  if (!t) throw ShapeError(path, "missing body");
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    const auto* rec = std::get_if<DbRec>(&t->value);
    if (rec == nullptr) throw ShapeError(path, "expected a subterm");
    Relev<NodePtr> inner = code_term(syntax, rec->term, concat(kz, r->kind.scope), r->kind.sort, path + "/rec");
    return map_relev([](const Bind& b) { return make_node(b); }, bind(r->kind.scope, inner));
  }
  if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    const auto* tag = std::get_if<DbTag>(&t->value);
    if (tag == nullptr) throw ShapeError(path, "expected a tag");
    auto arm = s->arms.find(tag->tag);
    if (arm == s->arms.end()) throw ShapeError(path, "unknown tag " + tag->tag);
    Relev<NodePtr> body = codes(syntax, *arm->second, tag->body, kz, path + "/" + tag->tag);
    return map_relev([&](const NodePtr& b) { return make_node(Tagged{tag->tag, b}); }, body);
  }
  if (std::holds_alternative<Desc::One>(desc.node)) {
    if (!std::holds_alternative<DbUnit>(t->value)) throw ShapeError(path, "expected unit");
    return runit(kz);
  }
  const auto& times = std::get<Desc::Times>(desc.node);
  const auto* pair = std::get_if<DbPair>(&t->value);
  if (pair == nullptr) throw ShapeError(path, "expected a pair");
  Relev<RPair> p = rpair(codes(syntax, *times.left, pair->left, kz, path + "/pair.left"),
                         codes(syntax, *times.right, pair->right, kz, path + "/pair.right"));
  return map_relev([](const RPair& q) { return make_node(q); }, p);
}

// `into` embeds the node's scope in the ambient de Bruijn scope kz.
TermDB decodes(const Syntax& syntax, const Desc& desc, const NodePtr& node, const Thinning& into,
               const std::string& path);

TermDB decode_term(const Syntax& syntax, const NodePtr& node, const Thinning& into, const Sort& sort,
                   const std::string& path) {
  if (const auto* h = std::get_if<Hash>(&node->value)) {
    const Thinning x = compose(h->pair.left.thinning, into);
    if (x.source_size() != 1) throw ShapeError(path + "/hash.var", "variable support is not a singleton");
    const std::size_t index = x.bits().select(0);
    const Kind& k = into.target()[index];
    if (!(k.sort == sort)) throw ShapeError(path, "variable of the wrong sort");
    TermDB spine = decodes(syntax, *spine_desc(k.scope), h->pair.right.thing, compose(h->pair.right.thinning, into),
                           path + "/hash.spine");
    return make_db(DbVar{index, std::move(spine)});
  }
  if (const auto* c = std::get_if<Con>(&node->value)) {
    return make_db(DbCon{decodes(syntax, syntax.at(sort), c->body, into, path + "/con")});
  }
  throw ShapeError(path, "expected a variable or a construct");
}

TermDB decodes(const Syntax& syntax, const Desc& desc, const NodePtr& node, const Thinning& into,
               const std::string& path) {
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    const auto* b = std::get_if<Bind>(&node->value);
    if (b == nullptr) throw ShapeError(path, "expected a binding site");
    return make_db(DbRec{decode_term(syntax, b->body, concat_thin(into, b->usage), r->kind.sort, path + "/bind")});
  }
  if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    const auto* tag = std::get_if<Tagged>(&node->value);
    if (tag == nullptr) throw ShapeError(path, "expected a tag");
    auto arm = s->arms.find(tag->tag);
    if (arm == s->arms.end()) throw ShapeError(path, "unknown tag " + tag->tag);
    return make_db(DbTag{tag->tag, decodes(syntax, *arm->second, tag->body, into, path + "/" + tag->tag)});
  }
  if (std::holds_alternative<Desc::One>(desc.node)) {
    if (!std::holds_alternative<UnitLeaf>(node->value)) throw ShapeError(path, "expected unit");
    return db_unit();
  }
  const auto& times = std::get<Desc::Times>(desc.node);
  const auto* p = std::get_if<RPair>(&node->value);
  if (p == nullptr) throw ShapeError(path, "expected a pair");
  return make_db(DbPair{decodes(syntax, *times.left, p->left.thing, compose(p->left.thinning, into), path + "/pair.left"),
                        decodes(syntax, *times.right, p->right.thing, compose(p->right.thinning, into),
                                path + "/pair.right")});
}

TermDB thin_db_body(const Syntax& syntax, const Desc& desc, const TermDB& t, const Thinning& theta);

TermDB thin_db_term(const Syntax& syntax, const TermDB& t, const Thinning& theta, const Sort& sort) {
  if (const auto* v = std::get_if<DbVar>(&t->value)) {
    if (v->index >= theta.source_size()) throw ScopeMismatch("thin_db: variable outside the thinning's source");
    const Kind& k = theta.target()[theta.bits().select(v->index)];
    return make_db(DbVar{theta.bits().select(v->index), thin_db_body(syntax, *spine_desc(k.scope), v->spine, theta)});
  }
  const auto& c = std::get<DbCon>(t->value);
  return make_db(DbCon{thin_db_body(syntax, syntax.at(sort), c.body, theta)});
}

TermDB thin_db_body(const Syntax& syntax, const Desc& desc, const TermDB& t, const Thinning& theta) {
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    const auto& rec = std::get<DbRec>(t->value);
    return make_db(
        DbRec{thin_db_term(syntax, rec.term, concat_thin(theta, identity(r->kind.scope)), r->kind.sort)});
  }
  if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    const auto& tag = std::get<DbTag>(t->value);
    return make_db(DbTag{tag.tag, thin_db_body(syntax, *s->arms.at(tag.tag), tag.body, theta)});
  }
  if (std::holds_alternative<Desc::One>(desc.node)) return t;
  const auto& times = std::get<Desc::Times>(desc.node);
  const auto& p = std::get<DbPair>(t->value);
  return make_db(
      DbPair{thin_db_body(syntax, *times.left, p.left, theta), thin_db_body(syntax, *times.right, p.right, theta)});
}

void scan_body(const Syntax& syntax, const Desc& desc, const TermDB& t, const Scope& kz, std::size_t outer,
               BitVec& used);

void scan_term(const Syntax& syntax, const TermDB& t, const Scope& kz, std::size_t outer, const Sort& sort,
               BitVec& used) {
  if (const auto* v = std::get_if<DbVar>(&t->value)) {
    if (v->index < outer) used.set(v->index);
    scan_body(syntax, *spine_desc(kz[v->index].scope), v->spine, kz, outer, used);
    return;
  }
  scan_body(syntax, syntax.at(sort), std::get<DbCon>(t->value).body, kz, outer, used);
}

void scan_body(const Syntax& syntax, const Desc& desc, const TermDB& t, const Scope& kz, std::size_t outer,
               BitVec& used) {
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    scan_term(syntax, std::get<DbRec>(t->value).term, concat(kz, r->kind.scope), outer, r->kind.sort, used);
  } else if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    const auto& tag = std::get<DbTag>(t->value);
    scan_body(syntax, *s->arms.at(tag.tag), tag.body, kz, outer, used);
  } else if (const auto* times = std::get_if<Desc::Times>(&desc.node)) {
    const auto& p = std::get<DbPair>(t->value);
    scan_body(syntax, *times->left, p.left, kz, outer, used);
    scan_body(syntax, *times->right, p.right, kz, outer, used);
  }
}

}  // namespace

std::optional<ValidationError> validate_db(const Syntax& syntax, const TermDB& t, const Scope& kz, const Sort& sort) {
  try {
    check_db_term(syntax, t, kz, sort, "$");
  } catch (const Invalid& bad) {
    return bad.error;
  }
  return std::nullopt;
}

std::optional<ValidationError> validate_r(const Syntax& syntax, const Relev<NodePtr>& r, const Scope& kz,
                                          const Sort& sort) {
  try {
    if (!(r.thinning.target() == kz)) shape("$", "root thinning does not target the ambient scope");
    require_whole(check_r_term(syntax, r.thing, r.thinning.source(), sort, "$"), "$");
  } catch (const Invalid& bad) {
    return bad.error;
  }
  return std::nullopt;
}

Relev<NodePtr> code(const Syntax& syntax, const TermDB& t, const Scope& kz, const Sort& sort) {
  return code_term(syntax, t, kz, sort, "$");
}

TermDB decode(const Syntax& syntax, const Relev<NodePtr>& r, const Scope& kz, const Sort& sort) {
  if (!(r.thinning.target() == kz)) throw ScopeMismatch("decode: root thinning does not target the ambient scope");
  return decode_term(syntax, r.thing, r.thinning, sort, "$");
}

TermDB thin_db(const Syntax& syntax, const TermDB& t, const Thinning& theta, const Sort& sort) {
  return thin_db_term(syntax, t, theta, sort);
}

BitVec free_variables(const Syntax& syntax, const TermDB& t, const Scope& kz, const Sort& sort) {
  BitVec used(kz.size(), false);
  scan_term(syntax, t, kz, kz.size(), sort, used);
  return used;
}

}  // namespace codb

#include "codb/hsub.hpp"

#include "codb/errors.hpp"
#include "codb/instr.hpp"
#include "codb/universe.hpp"

namespace codb {

namespace {

NodePtr as_node(const Bind& b) { return make_node(b); }
NodePtr as_node(const RPair& p) { return make_node(p); }

void check_result(const Syntax& syntax, const HSub& h, const Relev<NodePtr>& r, const Sort& sort) {
  if (auto bad = validate_r(syntax, r, h.trg, sort)) throw ShapeError(bad->path, "substitution result: " + bad->to_string());
}

}  // namespace

HSub instantiate(const Scope& trg, const Scope& jz, const Relev<NodePtr>& images) {
  LeftRightCover lr = left_right_cover(trg, jz, false);
  if (!(images.thinning.target() == trg)) throw ScopeMismatch("instantiate: images do not live over the target scope");
  return HSub{concat(trg, jz), trg, jz, trg, lr.left, lr.right, identity(trg), lr.cover, images};
}

HSub wk_hsub(const HSub& h, const Scope& jz) {
  if (jz.empty()) return h;
  Cover bound(false, std::vector<Side>(jz.size(), Side::Left), jz);
  return HSub{concat(h.src, jz),
              concat(h.trg, jz),
              h.act,
              concat(h.pass, jz),
              concat_thin(h.passive, identity(jz)),
              concat_thin(h.active, empty(jz)),
              concat_thin(h.pass_trg, identity(jz)),
              concat_cover(h.parti, bound),
              thin_relev(concat_thin(identity(h.trg), empty(jz)), h.images)};
}

Relev<NodePtr> h_sub(const Syntax& syntax, const HSub& h, const NodePtr& t, const Thinning& psi, const Sort& sort) {
  Refinement ref = refine(psi, h.parti);
  if (ref.right.is_empty() && instr::fast_paths_enabled()) {
    all_left(ref.cover);
    ++instr::counters().fast_paths;
    return Relev<NodePtr>{t, compose(ref.left_embed, h.pass_trg)};
  }
  instr::visit();
  Relev<NodePtr> out;
  if (const auto* hash = std::get_if<Hash>(&t->value)) {
    const RPair& p = hash->pair;
    const Thinning x = compose(p.left.thinning, psi);
    const Kind& k = h.src[x.bits().select(0)];
    Relev<NodePtr> ss = h_subs(syntax, *spine_desc(k.scope), h, p.right.thing, compose(p.right.thinning, psi));
    out = hered(syntax, x, h, ss);
  } else if (const auto* con = std::get_if<Con>(&t->value)) {
    out = map_relev([](const NodePtr& b) { return make_node(Con{b}); },
                    h_subs(syntax, syntax.at(sort), h, con->body, psi));
  } else {
    throw ShapeError("", "h_sub: expected a variable or a construct");
  }
  if (instr::checking()) check_result(syntax, h, out, sort);
  return out;
}

Relev<NodePtr> h_subs(const Syntax& syntax, const Desc& desc, const HSub& h, const NodePtr& body, const Thinning& psi) {
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    const auto* b = std::get_if<Bind>(&body->value);
    if (b == nullptr) throw ShapeError("", "h_subs: expected a binding site");
    instr::visit();
    const Scope& jz = r->kind.scope;
    Relev<NodePtr> inner = h_sub(syntax, wk_hsub(h, jz), b->body, concat_thin(psi, b->usage), r->kind.sort);
    return map_relev([](const Bind& x) { return as_node(x); }, bind(jz, inner));
  }
  if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    const auto* tag = std::get_if<Tagged>(&body->value);
    if (tag == nullptr) throw ShapeError("", "h_subs: expected a tag");
    instr::visit();
    return map_relev([&](const NodePtr& b) { return make_node(Tagged{tag->tag, b}); },
                     h_subs(syntax, *s->arms.at(tag->tag), h, tag->body, psi));
  }
  if (std::holds_alternative<Desc::One>(desc.node)) {
    instr::visit();
    return runit(h.trg);
  }
  const auto& times = std::get<Desc::Times>(desc.node);
  const auto* p = std::get_if<RPair>(&body->value);
  if (p == nullptr) throw ShapeError("", "h_subs: expected a pair");
  instr::visit();
  Relev<RPair> joined = rpair(h_subs(syntax, *times.left, h, p->left.thing, compose(p->left.thinning, psi)),
                              h_subs(syntax, *times.right, h, p->right.thing, compose(p->right.thinning, psi)));
  return map_relev([](const RPair& q) { return as_node(q); }, joined);
}

Relev<NodePtr> hered(const Syntax& syntax, const Thinning& x, const HSub& h, const Relev<NodePtr>& ss) {
  if (x.source_size() != 1) throw NotSingleton("hered: variable thinning selects " + std::to_string(x.source_size()));
  const std::size_t pos = x.bits().select(0);
  switch (h.parti.shape()[pos]) {
    case Side::Both:
      throw Unreachable("hered: variable " + std::to_string(pos) + " is both passive and active");
    case Side::Left: {
      const std::size_t rank = h.passive.bits().rank(pos);
      Relev<RPair> p = rpair(rvar(compose(point(h.pass, rank), h.pass_trg)), ss);
      return map_relev([](const RPair& q) { return make_node(Hash{q}); }, p);
    }
    case Side::Right:
      break;
  }
  const std::size_t a = h.active.bits().rank(pos);
  Relev<NodePtr> img = h.images;
  for (std::size_t i = a + 1; i < h.act.size(); ++i) img = outl(img);
  const Relev<NodePtr> image = outr(img);
  const auto* b = std::get_if<Bind>(&image.thing->value);
  if (b == nullptr) throw ShapeError("", "hered: image is not a binding site");

  const Kind& k = h.act[a];
  auto& c = instr::counters();
  ++c.hereditary_calls;
  if (scope_measure(k.scope) >= scope_measure(h.act)) ++c.metric_violations;

  HSub next = instantiate(h.trg, k.scope, ss);
  return h_sub(syntax, next, b->body, concat_thin(image.thinning, b->usage), k.sort);
}

std::string to_string(const HSub& h) {
  return "[pass:" + to_string(h.pass) + "|act:" + to_string(h.act) + "] parti:" + h.parti.to_string() +
         " images:" + render(h.images);
}

}  // namespace codb

#include "codb/relev.hpp"

namespace codb {

bool operator==(const NodePtr& a, const NodePtr& b) {
  if (a.get() == b.get()) return true;
  if (a.get() == nullptr || b.get() == nullptr) return false;
  return *a == *b;
}

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

BitVec pair_support(const RPair& p, std::size_t scope_size) {
  BitVec out(scope_size);
  for (const Relev<NodePtr>* side : {&p.left, &p.right}) {
    if (side->thinning.target_size() != scope_size) throw ShapeError("", "pair component has the wrong ambient scope");
    const BitVec inner = recompute_support(side->thing, side->thinning.source_size());
    out = out | deposit(inner, side->thinning.bits());
  }
  return out;
}

}  // namespace

BitVec recompute_support(const NodePtr& node, std::size_t scope_size) {
  return std::visit(
      overloaded{
          [&](const UnitLeaf&) { return BitVec(scope_size); },
          [&](const VarLeaf&) { return BitVec(scope_size, true); },
          [&](const Tagged& t) { return recompute_support(t.body, scope_size); },
          [&](const Con& c) { return recompute_support(c.body, scope_size); },
          [&](const RPair& p) { return pair_support(p, scope_size); },
          [&](const Hash& h) { return pair_support(h.pair, scope_size); },
          [&](const Bind& b) {
            const BitVec inner = recompute_support(b.body, scope_size + b.usage.source_size());
            return inner.slice(0, scope_size);
          },
      },
      node->value);
}

bool is_relevant(const Relev<NodePtr>& r) {
  return recompute_support(r.thing, r.thinning.source_size()).all();
}

namespace detail {
void check_mapped_support(const NodePtr& node, std::size_t scope_size) {
  if (!recompute_support(node, scope_size).all()) throw ShapeError("", "map_relev changed the support of its argument");
}
}  // namespace detail

Relev<RPair> rpair(const Relev<NodePtr>& s, const Relev<NodePtr>& t) {
  CoproductResult cop = coproduct(s.thinning, t.thinning);
  RPair pair{Relev<NodePtr>{s.thing, std::move(cop.left_in)}, Relev<NodePtr>{t.thing, std::move(cop.right_in)},
             std::move(cop.cover)};
  return Relev<RPair>{std::move(pair), std::move(cop.joint)};
}

Relev<NodePtr> outl(const Relev<RPair>& p) { return thin_relev(p.thinning, p.thing.left); }

Relev<NodePtr> outr(const Relev<RPair>& p) { return thin_relev(p.thinning, p.thing.right); }

namespace {
const RPair& as_pair(const NodePtr& node) {
  if (const auto* p = std::get_if<RPair>(&node->value)) return *p;
  throw ShapeError("", "expected a pair node");
}
}  // namespace

Relev<NodePtr> outl(const Relev<NodePtr>& p) { return thin_relev(p.thinning, as_pair(p.thing).left); }

Relev<NodePtr> outr(const Relev<NodePtr>& p) { return thin_relev(p.thinning, as_pair(p.thing).right); }

Relev<Bind> bind(const Scope& jz, const Relev<NodePtr>& t) {
  auto [global, local] = split(jz, t.thinning);
  return Relev<Bind>{Bind{std::move(local), t.thing}, std::move(global)};
}

Relev<NodePtr> runit(const Scope& kz) {
  static const NodePtr unit = make_node(UnitLeaf{});
  return Relev<NodePtr>{unit, empty(kz)};
}

Relev<NodePtr> rvar(const Thinning& x) {
  if (x.source_size() != 1) {
    throw NotSingleton("variable thinning " + x.to_string() + " selects " + std::to_string(x.source_size()) +
                       " positions");
  }
  static const NodePtr only = make_node(VarLeaf{});
  return Relev<NodePtr>{only, x};
}

namespace {
std::string bits_or_epsilon(const Thinning& th) { return th.target_size() == 0 ? "ε" : th.to_string(); }
}  // namespace

std::string render(const NodePtr& node) {
  return std::visit(overloaded{
                        [](const UnitLeaf&) -> std::string { return "⟨⟩"; },
                        [](const VarLeaf&) -> std::string { return "only"; },
                        [](const Tagged& t) { return t.tag + " " + render(t.body); },
                        [](const Con& c) { return render(c.body); },
                        [](const RPair& p) {
                          return "(pair " + render(p.left) + " " + render(p.right) + " " + p.cover.to_string() + ")";
                        },
                        [](const Hash& h) {
                          const RPair& p = h.pair;
                          return "# (pair " + render(p.left) + " " + render(p.right) + " " + p.cover.to_string() +
                                 ")";
                        },
                        [](const Bind& b) { return "(" + bits_or_epsilon(b.usage) + "\\ " + render(b.body) + ")"; },
                    },
                    node->value);
}

std::string render(const Relev<NodePtr>& r) { return "(" + render(r.thing) + " ↑ " + bits_or_epsilon(r.thinning) + ")"; }

}  // namespace codb

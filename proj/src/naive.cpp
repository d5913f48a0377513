// The textbook oracle: index terms (0 = innermost binder), shifting and
// substitution by full traversal. Shares nothing with the co-de-Bruijn engine
// except the TermDB interchange type.

#include <memory>

#include "codb/instr.hpp"
#include "codb/lam.hpp"

namespace codb::lam {

namespace {

struct Ix;
using IxPtr = std::shared_ptr<const Ix>;

struct Ix {
  enum class Tag { Var, App, Lam } tag;
  long index = 0;
  IxPtr fun, arg;  // App; Lam keeps its body in fun
};

IxPtr ivar(long i) { return std::make_shared<const Ix>(Ix{Ix::Tag::Var, i, nullptr, nullptr}); }
IxPtr iapp(IxPtr f, IxPtr a) { return std::make_shared<const Ix>(Ix{Ix::Tag::App, 0, std::move(f), std::move(a)}); }
IxPtr ilam(IxPtr b) { return std::make_shared<const Ix>(Ix{Ix::Tag::Lam, 0, std::move(b), nullptr}); }

IxPtr from_db(const TermDB& t, long depth) {
  if (const auto* v = std::get_if<DbVar>(&t->value)) return ivar(depth - 1 - static_cast<long>(v->index));
  const auto& tag = std::get<DbTag>(std::get<DbCon>(t->value).body->value);
  if (tag.tag == "lam") return ilam(from_db(std::get<DbRec>(tag.body->value).term, depth + 1));
  const auto& p = std::get<DbPair>(tag.body->value);
  return iapp(from_db(std::get<DbRec>(p.left->value).term, depth), from_db(std::get<DbRec>(p.right->value).term, depth));
}

TermDB to_db(const IxPtr& t, long depth) {
  switch (t->tag) {
    case Ix::Tag::Var:
      return var(static_cast<std::size_t>(depth - 1 - t->index));
    case Ix::Tag::Lam:
      return abs(to_db(t->fun, depth + 1));
    case Ix::Tag::App:
      break;
  }
  return app(to_db(t->fun, depth), to_db(t->arg, depth));
}

IxPtr shift(const IxPtr& t, long d, long cutoff) {
  ++instr::counters().naive_visits;
  switch (t->tag) {
    case Ix::Tag::Var:
      return t->index >= cutoff ? ivar(t->index + d) : t;
    case Ix::Tag::Lam:
      return ilam(shift(t->fun, d, cutoff + 1));
    case Ix::Tag::App:
      break;
  }
  return iapp(shift(t->fun, d, cutoff), shift(t->arg, d, cutoff));
}

// t[j := s], s already living under the same binders as t.
IxPtr subst(const IxPtr& t, long j, const IxPtr& s) {
  ++instr::counters().naive_visits;
  switch (t->tag) {
    case Ix::Tag::Var:
      return t->index == j ? s : t;
    case Ix::Tag::Lam:
      return ilam(subst(t->fun, j + 1, shift(s, 1, 0)));
    case Ix::Tag::App:
      break;
  }
  return iapp(subst(t->fun, j, s), subst(t->arg, j, s));
}

IxPtr contract(const IxPtr& body, const IxPtr& arg) { return shift(subst(body, 0, shift(arg, 1, 0)), -1, 0); }

IxPtr step(const IxPtr& t) {
  ++instr::counters().naive_visits;
  switch (t->tag) {
    case Ix::Tag::Var:
      return nullptr;
    case Ix::Tag::Lam: {
      IxPtr b = step(t->fun);
      return b ? ilam(b) : nullptr;
    }
    case Ix::Tag::App:
      break;
  }
  if (t->fun->tag == Ix::Tag::Lam) return contract(t->fun->fun, t->arg);
  if (IxPtr f = step(t->fun)) return iapp(f, t->arg);
  if (IxPtr a = step(t->arg)) return iapp(t->fun, a);
  return nullptr;
}

bool redex(const IxPtr& t) {
  switch (t->tag) {
    case Ix::Tag::Var:
      return false;
    case Ix::Tag::Lam:
      return redex(t->fun);
    case Ix::Tag::App:
      break;
  }
  return t->fun->tag == Ix::Tag::Lam || redex(t->fun) || redex(t->arg);
}

}  // namespace

TermDB naive_subst(const TermDB& t, std::size_t scope_size, std::size_t j, const TermDB& s) {
  const long n = static_cast<long>(scope_size);
  const long jj = static_cast<long>(j);
  IxPtr arg = shift(from_db(s, n - 1), 1, jj);
  return to_db(shift(subst(from_db(t, n), jj, arg), -1, jj), n - 1);
}

NaiveNormalized naive_normalize(const TermDB& t, std::size_t scope_size, std::size_t fuel) {
  const long depth = static_cast<long>(scope_size);
  IxPtr cur = from_db(t, depth);
  NaiveNormalized out{t, 0, false};
  while (out.steps < fuel) {
    IxPtr next = step(cur);
    if (!next) break;
    cur = std::move(next);
    ++out.steps;
  }
  out.out_of_fuel = out.steps == fuel && redex(cur);
  out.term = to_db(cur, depth);
  return out;
}

}  // namespace codb::lam

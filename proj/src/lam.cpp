#include "codb/lam.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "codb/errors.hpp"
#include "codb/hsub.hpp"
#include "codb/sexp.hpp"
#include "codb/universe.hpp"

namespace codb::lam {

namespace {

Syntax build_syntax() {
  Syntax s;
  std::map<std::string, DescPtr, std::less<>> arms;
  arms["app"] = times_d(rec_d(star()), rec_d(star()));
  arms["lam"] = rec_d(Kind{Scope{star()}, kIota});
  s.define(kIota, sg_d(Datoid{{"app", "lam"}}, std::move(arms)));
  return s;
}

// ---------------------------------------------------------------------------
// lexing shared by the named and index parsers

constexpr std::string_view kLambda = "\xCE\xBB";

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::size_t pos() {
    skip();
    return pos_;
  }
  bool at_end() { return pos() >= text_.size(); }
  bool peek(char c) { return !at_end() && text_[pos_] == c; }
  bool peek_lambda() {
    if (at_end()) return false;
    return text_[pos_] == '\\' || text_.substr(pos_, kLambda.size()) == kLambda;
  }
  void lambda() {
    if (!peek_lambda()) throw ParseError(pos_, "expected a lambda");
    pos_ += text_[pos_] == '\\' ? 1 : kLambda.size();
  }
  void expect(char c) {
    if (!peek(c)) {
      throw ParseError(pos_, at_end() ? std::string("expected '") + c + "' before end of input"
                                      : std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  bool peek_ident() {
    if (at_end()) return false;
    const auto c = static_cast<unsigned char>(text_[pos_]);
    return std::isalpha(c) || c == '_';
  }
  std::string ident() {
    if (!peek_ident()) throw ParseError(pos(), at_end() ? "expected a name before end of input" : "expected a name");
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (!(std::isalnum(c) || c == '_' || c == '\'')) break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  bool peek_digit() { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  std::size_t number() {
    if (!peek_digit()) throw ParseError(pos(), "expected an index");
    std::size_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

NamedPtr parse_named_term(Lexer& lx);

NamedPtr parse_named_atom(Lexer& lx) {
  if (lx.peek('(')) {
    lx.expect('(');
    NamedPtr t = parse_named_term(lx);
    lx.expect(')');
    return t;
  }
  return nvar(lx.ident());
}

NamedPtr parse_named_term(Lexer& lx) {
  if (lx.peek_lambda()) {
    lx.lambda();
    std::string name = lx.ident();
    lx.expect('.');
    return nlam(std::move(name), parse_named_term(lx));
  }
  NamedPtr t = parse_named_atom(lx);
  for (;;) {
    if (lx.peek_lambda()) return napp(t, parse_named_term(lx));
    if (!lx.peek('(') && !lx.peek_ident()) return t;
    t = napp(t, parse_named_atom(lx));
  }
}

TermDB parse_index_term(Lexer& lx, std::size_t depth);

TermDB parse_index_atom(Lexer& lx, std::size_t depth) {
  if (lx.peek('(')) {
    lx.expect('(');
    TermDB t = parse_index_term(lx, depth);
    lx.expect(')');
    return t;
  }
  const std::size_t at = lx.pos();
  const std::size_t i = lx.number();
  if (i >= depth) throw ParseError(at, "index " + std::to_string(i) + " exceeds the " + std::to_string(depth) + " variables in scope");
  return var(depth - 1 - i);
}

TermDB parse_index_term(Lexer& lx, std::size_t depth) {
  if (lx.peek_lambda()) {
    lx.lambda();
    if (lx.peek('.')) lx.expect('.');
    return abs(parse_index_term(lx, depth + 1));
  }
  TermDB t = parse_index_atom(lx, depth);
  for (;;) {
    if (lx.peek_lambda()) return app(t, parse_index_term(lx, depth));
    if (!lx.peek('(') && !lx.peek_digit()) return t;
    t = app(t, parse_index_atom(lx, depth));
  }
}

TermDB resolve_in(const NamedPtr& t, std::vector<std::string>& names) {
  if (const auto* v = std::get_if<NVar>(&t->value)) {
    for (std::size_t i = names.size(); i-- > 0;) {
      if (names[i] == v->name) return var(i);
    }
    throw UnboundName(v->name);
  }
  if (const auto* a = std::get_if<NApp>(&t->value)) return app(resolve_in(a->fun, names), resolve_in(a->arg, names));
  const auto& l = std::get<NLam>(t->value);
  names.push_back(l.name);
  TermDB body = resolve_in(l.body, names);
  names.pop_back();
  return abs(body);
}

// ---------------------------------------------------------------------------
// reading λ structure back out of generic nodes

struct LamView {
  const Thinning* usage;
  const NodePtr* body;
};

const Tagged* tagged(const NodePtr& node) {
  const auto* con = std::get_if<Con>(&node->value);
  if (con == nullptr) return nullptr;
  return std::get_if<Tagged>(&con->body->value);
}

std::optional<LamView> as_lam(const NodePtr& node) {
  const Tagged* t = tagged(node);
  if (t == nullptr || t->tag != "lam") return std::nullopt;
  const auto& b = std::get<Bind>(t->body->value);
  return LamView{&b.usage, &b.body};
}

const RPair* as_app(const NodePtr& node) {
  const Tagged* t = tagged(node);
  if (t == nullptr || t->tag != "app") return nullptr;
  return &std::get<RPair>(t->body->value);
}

// The subterm under an app component's empty binder.
const NodePtr& under(const Relev<NodePtr>& component) { return std::get<Bind>(component.thing->value).body; }

NodePtr lam_node(const NodePtr& bind_node) { return make_node(Con{make_node(Tagged{"lam", bind_node})}); }
NodePtr app_node(const NodePtr& pair_node) { return make_node(Con{make_node(Tagged{"app", pair_node})}); }

Relev<NodePtr> wrap_component(const Relev<NodePtr>& term) {
  return map_relev([](const Bind& b) { return make_node(b); }, bind(Scope{}, term));
}

Relev<NodePtr> rebuild_app(const Relev<NodePtr>& f, const Relev<NodePtr>& a) {
  return map_relev([](const RPair& p) { return app_node(make_node(p)); }, rpair(f, a));
}

// Reduces within r's own support. Result lives over the same ambient scope.
std::optional<Relev<NodePtr>> step(const Relev<NodePtr>& r) {
  ++instr::counters().search_visits;
  const Scope here = r.thinning.source();
  if (const RPair* p = as_app(r.thing)) {
    if (auto fun = as_lam(under(p->left))) {
      Relev<NodePtr> out;
      if (fun->usage->is_empty()) {
        out = Relev<NodePtr>{*fun->body, p->left.thinning};
      } else {
        Relev<NodePtr> spine =
            map_relev([](const RPair& q) { return make_node(q); }, rpair(runit(here), p->right));
        HSub h = instantiate(here, Scope{star()}, spine);
        out = h_sub(syntax(), h, *fun->body, concat_thin(p->left.thinning, *fun->usage), kIota);
      }
      return thin_relev(r.thinning, out);
    }
    if (auto f = step(Relev<NodePtr>{under(p->left), p->left.thinning})) {
      return thin_relev(r.thinning, rebuild_app(wrap_component(*f), p->right));
    }
    if (auto a = step(Relev<NodePtr>{under(p->right), p->right.thinning})) {
      return thin_relev(r.thinning, rebuild_app(p->left, wrap_component(*a)));
    }
    return std::nullopt;
  }
  if (auto l = as_lam(r.thing)) {
    const Scope inner = concat(here, l->usage->source());
    auto b = step(Relev<NodePtr>{*l->body, identity(inner)});
    if (!b) return std::nullopt;
    Relev<NodePtr> widened = thin_relev(concat_thin(identity(here), *l->usage), *b);
    Relev<NodePtr> out = map_relev([](const Bind& x) { return lam_node(make_node(x)); }, bind(Scope{star()}, widened));
    return thin_relev(r.thinning, out);
  }
  return std::nullopt;
}

bool redex_in(const NodePtr& node) {
  ++instr::counters().search_visits;
  if (const RPair* p = as_app(node)) {
    return as_lam(under(p->left)).has_value() || redex_in(under(p->left)) || redex_in(under(p->right));
  }
  if (auto l = as_lam(node)) return redex_in(*l->body);
  return false;
}

// ---------------------------------------------------------------------------
// printing

std::string binder_name(std::size_t depth, const std::vector<std::string>& env) {
  std::size_t k = 0;
  for (std::size_t seen = 0;; ++k) {
    std::string name(1, static_cast<char>('a' + k % 26));
    if (k >= 26) name += std::to_string(k / 26);
    bool clash = false;
    for (const auto& e : env) clash = clash || e == name;
    if (clash) continue;
    if (seen == depth) return name;
    ++seen;
  }
}

struct DbView {
  enum class Kind { Var, App, Lam } kind;
  std::size_t pos = 0;
  const TermDB* fun = nullptr;
  const TermDB* arg = nullptr;
  const TermDB* body = nullptr;
};

DbView view(const TermDB& t) {
  if (const auto* v = std::get_if<DbVar>(&t->value)) return {DbView::Kind::Var, v->index};
  const auto& tag = std::get<DbTag>(std::get<DbCon>(t->value).body->value);
  if (tag.tag == "lam") return {DbView::Kind::Lam, 0, nullptr, nullptr, &std::get<DbRec>(tag.body->value).term};
  const auto& pair = std::get<DbPair>(tag.body->value);
  return {DbView::Kind::App, 0, &std::get<DbRec>(pair.left->value).term, &std::get<DbRec>(pair.right->value).term};
}

void print_named(const TermDB& t, std::vector<std::string>& names, std::size_t free, const std::vector<std::string>& env,
                 bool parens, std::string& out);

void print_named_arg(const TermDB& t, std::vector<std::string>& names, std::size_t free,
                     const std::vector<std::string>& env, std::string& out) {
  print_named(t, names, free, env, view(t).kind != DbView::Kind::Var, out);
}

void print_named(const TermDB& t, std::vector<std::string>& names, std::size_t free, const std::vector<std::string>& env,
                 bool parens, std::string& out) {
  const DbView v = view(t);
  if (v.kind == DbView::Kind::Var) {
    out += v.pos < names.size() ? names[v.pos] : "_" + std::to_string(v.pos);
    return;
  }
  if (parens) out += '(';
  if (v.kind == DbView::Kind::Lam) {
    std::string name = binder_name(names.size() - free, env);
    out += '\\' + name + '.';
    names.push_back(name);
    print_named(*v.body, names, free, env, false, out);
    names.pop_back();
  } else {
    print_named(*v.fun, names, free, env, view(*v.fun).kind == DbView::Kind::Lam, out);
    out += ' ';
    print_named_arg(*v.arg, names, free, env, out);
  }
  if (parens) out += ')';
}

void print_index(const TermDB& t, std::size_t depth, bool parens, std::string& out) {
  const DbView v = view(t);
  if (v.kind == DbView::Kind::Var) {
    out += v.pos < depth ? std::to_string(depth - 1 - v.pos) : "?" + std::to_string(v.pos);
    return;
  }
  if (parens) out += '(';
  if (v.kind == DbView::Kind::Lam) {
    out += std::string(kLambda) + ". ";
    print_index(*v.body, depth + 1, false, out);
  } else {
    print_index(*v.fun, depth, view(*v.fun).kind == DbView::Kind::Lam, out);
    out += ' ';
    print_index(*v.arg, depth, view(*v.arg).kind != DbView::Kind::Var, out);
  }
  if (parens) out += ')';
}

std::string bits_or_epsilon(const Thinning& th) { return th.target_size() == 0 ? "ε" : th.to_string(); }

std::string print_codebruijn(const NodePtr& node) {
  if (const auto* h = std::get_if<Hash>(&node->value)) {
    const NodePtr& spine = h->pair.right.thing;
    if (std::holds_alternative<UnitLeaf>(spine->value)) return "# only";
    return "# only $ " + render(h->pair.right);
  }
  if (auto l = as_lam(node)) return std::string(kLambda) + " (" + l->usage->to_string() + "\\ " + print_codebruijn(*l->body) + ")";
  if (const RPair* p = as_app(node)) {
    auto component = [](const Relev<NodePtr>& c) {
      return "(" + print_codebruijn(under(c)) + " ↑ " + bits_or_epsilon(c.thinning) + ")";
    };
    return "app (pair " + component(p->left) + " " + component(p->right) + " " + p->cover.to_string() + ")";
  }
  return render(node);
}

// ---------------------------------------------------------------------------
// enumeration

using Bucket = std::vector<TermDB>;

const Bucket& exactly(std::size_t n, std::size_t k, std::map<std::pair<std::size_t, std::size_t>, Bucket>& memo) {
  auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Bucket out;
  if (n == 1) {
    for (std::size_t i = 0; i < k; ++i) out.push_back(var(i));
  } else if (n >= 2) {
    for (std::size_t a = 1; a + 1 < n; ++a) {
      const Bucket& fs = exactly(a, k, memo);
      const Bucket& xs = exactly(n - 1 - a, k, memo);
      for (const auto& f : fs) {
        for (const auto& x : xs) out.push_back(app(f, x));
      }
    }
    for (const auto& b : exactly(n - 1, k + 1, memo)) out.push_back(abs(b));
  }
  return memo[key] = std::move(out);
}

bool feasible(std::size_t n, std::size_t k) { return n >= 1 && (k > 0 || n >= 2); }

TermDB random_exact(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  if (n == 1) return var(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng));
  for (;;) {
    const bool want_lam = n == 2 || std::bernoulli_distribution(0.4)(rng);
    if (want_lam) return abs(random_exact(rng, n - 1, k + 1));
    const std::size_t a = std::uniform_int_distribution<std::size_t>(1, n - 2)(rng);
    if (feasible(a, k) && feasible(n - 1 - a, k)) return app(random_exact(rng, a, k), random_exact(rng, n - 1 - a, k));
  }
}

}  // namespace

const Syntax& syntax() {
  static const Syntax s = build_syntax();
  return s;
}

const Desc& description() { return syntax().at(kIota); }

NamedPtr nvar(std::string name) { return std::make_shared<const Named>(Named{NVar{std::move(name)}}); }
NamedPtr napp(NamedPtr f, NamedPtr a) { return std::make_shared<const Named>(Named{NApp{std::move(f), std::move(a)}}); }
NamedPtr nlam(std::string name, NamedPtr body) {
  return std::make_shared<const Named>(Named{NLam{std::move(name), std::move(body)}});
}

bool same(const NamedPtr& a, const NamedPtr& b) {
  if (a->value.index() != b->value.index()) return false;
  if (const auto* v = std::get_if<NVar>(&a->value)) return v->name == std::get<NVar>(b->value).name;
  if (const auto* x = std::get_if<NApp>(&a->value)) {
    const auto& y = std::get<NApp>(b->value);
    return same(x->fun, y.fun) && same(x->arg, y.arg);
  }
  const auto& x = std::get<NLam>(a->value);
  const auto& y = std::get<NLam>(b->value);
  return x.name == y.name && same(x.body, y.body);
}

NamedPtr parse(std::string_view text) {
  Lexer lx(text);
  NamedPtr t = parse_named_term(lx);
  if (!lx.at_end()) throw ParseError(lx.pos(), "unexpected input after term");
  return t;
}

TermDB resolve(const NamedPtr& t, const std::vector<std::string>& env) {
  std::vector<std::string> names = env;
  return resolve_in(t, names);
}

TermDB var(std::size_t pos) { return make_db(DbVar{pos, db_unit()}); }
TermDB app(TermDB f, TermDB a) {
  return make_db(DbCon{make_db(DbTag{"app", make_db(DbPair{make_db(DbRec{std::move(f)}), make_db(DbRec{std::move(a)})})})});
}
TermDB abs(TermDB body) { return make_db(DbCon{make_db(DbTag{"lam", make_db(DbRec{std::move(body)})})}); }

std::size_t size(const TermDB& t) {
  const DbView v = view(t);
  switch (v.kind) {
    case DbView::Kind::Var:
      return 1;
    case DbView::Kind::Lam:
      return 1 + size(*v.body);
    case DbView::Kind::App:
      break;
  }
  return 1 + size(*v.fun) + size(*v.arg);
}

TermDB parse_index(std::string_view text, std::size_t scope_size) {
  Lexer lx(text);
  TermDB t = parse_index_term(lx, scope_size);
  if (!lx.at_end()) throw ParseError(lx.pos(), "unexpected input after term");
  return t;
}

TermDB thin_db(const TermDB& t, const Thinning& theta) { return codb::thin_db(syntax(), t, theta, kIota); }

Relev<NodePtr> code(const TermDB& t, std::size_t scope_size) { return codb::code(syntax(), t, stars(scope_size), kIota); }

TermDB decode(const Relev<NodePtr>& r) { return codb::decode(syntax(), r, r.thinning.target(), kIota); }

std::optional<Relev<NodePtr>> beta_step(const Relev<NodePtr>& r) { return step(r); }

bool has_redex(const Relev<NodePtr>& r) { return redex_in(r.thing); }

Normalized normalize(const Relev<NodePtr>& r, std::size_t fuel) {
  Normalized out{r, 0, false};
  while (out.steps < fuel) {
    auto next = beta_step(out.term);
    if (!next) return out;
    out.term = std::move(*next);
    ++out.steps;
  }
  out.out_of_fuel = has_redex(out.term);
  return out;
}

Style parse_style(std::string_view name) {
  if (name == "named") return Style::Named;
  if (name == "index") return Style::Index;
  if (name == "codebruijn") return Style::CodeBruijn;
  if (name == "sexp") return Style::Sexp;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string pretty(const TermDB& t, Style style, const std::vector<std::string>& env) {
  std::string out;
  switch (style) {
    case Style::Named: {
      std::vector<std::string> names = env;
      print_named(t, names, env.size(), env, false, out);
      return out;
    }
    case Style::Index:
      print_index(t, env.size(), false, out);
      return out;
    case Style::CodeBruijn:
    case Style::Sexp:
      break;
  }
  return pretty(code(t, env.size()), style, env);
}

std::string pretty(const Relev<NodePtr>& r, Style style, const std::vector<std::string>& env) {
  switch (style) {
    case Style::CodeBruijn:
      return print_codebruijn(r.thing) + " ↑ " + bits_or_epsilon(r.thinning);
    case Style::Sexp:
      return to_sexp(r);
    case Style::Named:
    case Style::Index:
      break;
  }
  return pretty(decode(r), style, env);
}

void for_each_term(std::size_t max_nodes, std::size_t scope_size, const std::function<void(const TermDB&)>& f) {
  std::map<std::pair<std::size_t, std::size_t>, Bucket> memo;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (const auto& t : exactly(n, scope_size, memo)) f(t);
  }
}

std::vector<TermDB> enumerate_terms(std::size_t max_nodes, std::size_t scope_size) {
  std::vector<TermDB> out;
  for_each_term(max_nodes, scope_size, [&](const TermDB& t) { out.push_back(t); });
  return out;
}

TermDB random_term(std::mt19937_64& rng, std::size_t max_nodes, std::size_t scope_size) {
  const std::size_t lo = scope_size == 0 ? 2 : 1;
  if (max_nodes < lo) throw std::invalid_argument("random_term: no term of that size exists");
  const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, max_nodes)(rng);
  return random_exact(rng, n, scope_size);
}

}  // namespace codb::lam

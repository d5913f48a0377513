#pragma once

// The untyped lambda calculus as an instance of the generic universe:
// one sort ι, tags {app, lam}, app ↦ Rec * × Rec *, lam ↦ Rec ([*] ⇒ ι).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "codb/desc.hpp"
#include "codb/relev.hpp"
#include "codb/term_db.hpp"

namespace codb::lam {

const Syntax& syntax();
const Desc& description();

// ---------------------------------------------------------------------------
// named surface syntax

struct Named;
using NamedPtr = std::shared_ptr<const Named>;

struct NVar {
  std::string name;
};
struct NApp {
  NamedPtr fun;
  NamedPtr arg;
};
struct NLam {
  std::string name;
  NamedPtr body;
};

struct Named {
  std::variant<NVar, NApp, NLam> value;
};

NamedPtr nvar(std::string name);
NamedPtr napp(NamedPtr f, NamedPtr a);
NamedPtr nlam(std::string name, NamedPtr body);
bool same(const NamedPtr& a, const NamedPtr& b);

/// `\x.t` or `λx.t`, application by juxtaposition. Throws ParseError.
NamedPtr parse(std::string_view text);

/// Innermost binding wins; env names the scope's variables oldest first.
/// Throws UnboundName.
TermDB resolve(const NamedPtr& t, const std::vector<std::string>& env);

// ---------------------------------------------------------------------------
// de Bruijn helpers (positions oldest first)

TermDB var(std::size_t pos);
TermDB app(TermDB f, TermDB a);
TermDB abs(TermDB body);

/// Nodes: a variable is 1, an application 1 + both sides, a lambda 1 + its body.
std::size_t size(const TermDB& t);

/// `λ. 0 (λ. 1)`: textbook indices, counted from the innermost binder.
/// Free variables reach past the outermost binder into a scope of scope_size.
/// Throws ParseError.
TermDB parse_index(std::string_view text, std::size_t scope_size = 0);

TermDB thin_db(const TermDB& t, const Thinning& theta);
Relev<NodePtr> code(const TermDB& t, std::size_t scope_size);
TermDB decode(const Relev<NodePtr>& r);

// ---------------------------------------------------------------------------
// reduction

/// Contracts the leftmost-outermost redex, or nothing if r is normal.
std::optional<Relev<NodePtr>> beta_step(const Relev<NodePtr>& r);
bool has_redex(const Relev<NodePtr>& r);

struct Normalized {
  Relev<NodePtr> term;  // the normal form, or where fuel ran out
  std::size_t steps = 0;
  bool out_of_fuel = false;
};

/// Runs at most `fuel` steps; out_of_fuel if a redex remains afterwards.
Normalized normalize(const Relev<NodePtr>& r, std::size_t fuel);

// ---------------------------------------------------------------------------
// the textbook oracle

/// t[j ↦ s] for t over scope_size variables, j a textbook index (0 = newest)
/// and s over the same scope without j. The result drops j as well.
TermDB naive_subst(const TermDB& t, std::size_t scope_size, std::size_t j, const TermDB& s);

struct NaiveNormalized {
  TermDB term;
  std::size_t steps = 0;
  bool out_of_fuel = false;
};

/// Same strategy and fuel rule as normalize, by shifting and substituting.
NaiveNormalized naive_normalize(const TermDB& t, std::size_t scope_size, std::size_t fuel);

// ---------------------------------------------------------------------------
// display

enum class Style { Named, Index, CodeBruijn, Sexp };

/// Throws std::invalid_argument for an unknown name.
Style parse_style(std::string_view name);

/// Named style names free variables from env and binders a, b, c, ...
/// by depth, skipping anything in env.
std::string pretty(const TermDB& t, Style style, const std::vector<std::string>& env = {});
std::string pretty(const Relev<NodePtr>& r, Style style, const std::vector<std::string>& env = {});

// ---------------------------------------------------------------------------
// corpora

/// Every term of at most max_nodes nodes over scope_size free variables,
/// smaller first, then variables, applications, lambdas.
void for_each_term(std::size_t max_nodes, std::size_t scope_size, const std::function<void(const TermDB&)>& f);
std::vector<TermDB> enumerate_terms(std::size_t max_nodes, std::size_t scope_size);

/// A uniformly sized random term of 1..max_nodes nodes; scope_size 0 needs max_nodes >= 2.
TermDB random_term(std::mt19937_64& rng, std::size_t max_nodes, std::size_t scope_size);

}  // namespace codb::lam

#pragma once

// Co-de-Bruijn building blocks. A Relev<T> is a thing together with the
// thinning that embeds its exact support into an ambient scope. Terms are
// immutable trees of Node shared through NodePtr; moving a term to a bigger
// scope only touches its root thinning.

#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "codb/cover.hpp"
#include "codb/errors.hpp"
#include "codb/instr.hpp"
#include "codb/thin.hpp"

namespace codb {

template <class T>
struct Relev {
  T thing;
  Thinning thinning;  // support(thing) ⊑ ambient

  friend bool operator==(const Relev&, const Relev&) = default;
};

struct Node;

/// Shared, immutable handle to a term node. Equality is structural;
/// compare get() for identity.
class NodePtr {
 public:
  NodePtr() = default;
  explicit NodePtr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& operator*() const noexcept { return *node_; }
  const Node* operator->() const noexcept { return node_.get(); }
  const Node* get() const noexcept { return node_.get(); }
  explicit operator bool() const noexcept { return node_ != nullptr; }

  friend bool operator==(const NodePtr& a, const NodePtr& b);

 private:
  std::shared_ptr<const Node> node_;
};

/// Occupies the empty scope.
struct UnitLeaf {
  friend bool operator==(const UnitLeaf&, const UnitLeaf&) = default;
};

/// Occupies a singleton scope: the variable is the only thing there.
struct VarLeaf {
  friend bool operator==(const VarLeaf&, const VarLeaf&) = default;
};

/// Relevant pair: both components embed into the pair's scope and the cover
/// records which variables went left, right, or both ways.
struct RPair {
  Relev<NodePtr> left;
  Relev<NodePtr> right;
  Cover cover;

  friend bool operator==(const RPair&, const RPair&) = default;
};

/// Binding site. usage says which of the declared binders the body uses;
/// the body lives over ambient ++ source(usage).
struct Bind {
  Thinning usage;
  NodePtr body;

  friend bool operator==(const Bind&, const Bind&) = default;
};

/// A constructor tag in front of the rest of a node.
struct Tagged {
  std::string tag;
  NodePtr body;

  friend bool operator==(const Tagged&, const Tagged&) = default;
};

/// A variable applied to its spine: pair's left is a VarLeaf, its right the spine.
struct Hash {
  RPair pair;

  friend bool operator==(const Hash&, const Hash&) = default;
};

/// A construct of the syntax.
struct Con {
  NodePtr body;

  friend bool operator==(const Con&, const Con&) = default;
};

struct Node {
  std::variant<UnitLeaf, VarLeaf, Tagged, RPair, Bind, Hash, Con> value;

  friend bool operator==(const Node&, const Node&) = default;
};

template <class Alt>
NodePtr make_node(Alt alt) {
  return NodePtr(std::make_shared<const Node>(Node{std::move(alt)}));
}

/// Exact free-variable usage of a node living in a scope of `scope_size`
/// variables, recomputed from the leaves. Does not trust covers.
BitVec recompute_support(const NodePtr& node, std::size_t scope_size);

/// recompute_support(thing) selects everything in the thing's support.
bool is_relevant(const Relev<NodePtr>& r);

namespace detail {
void check_mapped_support(const NodePtr& node, std::size_t scope_size);
}

/// Applies a support-preserving function to the thing; the thinning stays.
template <class F, class T>
auto map_relev(F&& f, const Relev<T>& r) -> Relev<std::invoke_result_t<F, const T&>> {
  using U = std::invoke_result_t<F, const T&>;
  Relev<U> out{std::forward<F>(f)(r.thing), r.thinning};
  if constexpr (std::is_same_v<U, NodePtr>) {
    if (instr::checking()) detail::check_mapped_support(out.thing, out.thinning.source_size());
  }
  return out;
}

/// A thing that uses all of kz.
template <class T>
Relev<T> unit_relev(T thing, const Scope& kz) {
  return Relev<T>{std::move(thing), identity(kz)};
}

template <class T>
Relev<T> join_relev(const Relev<Relev<T>>& r) {
  return Relev<T>{r.thing.thing, compose(r.thing.thinning, r.thinning)};
}

/// Moves r along psi. The thing is shared, not rebuilt.
template <class T>
Relev<T> thin_relev(const Thinning& psi, const Relev<T>& r) {
  return Relev<T>{r.thing, compose(r.thinning, psi)};
}

/// Pairs two things over the same ambient scope, discarding what neither uses.
Relev<RPair> rpair(const Relev<NodePtr>& s, const Relev<NodePtr>& t);

Relev<NodePtr> outl(const Relev<RPair>& p);
Relev<NodePtr> outr(const Relev<RPair>& p);
/// Projections of a pair node; throws ShapeError if the node is not a pair.
Relev<NodePtr> outl(const Relev<NodePtr>& p);
Relev<NodePtr> outr(const Relev<NodePtr>& p);

/// Abstracts the trailing jz variables of t's ambient scope.
Relev<Bind> bind(const Scope& jz, const Relev<NodePtr>& t);

/// The unit, using nothing from kz.
Relev<NodePtr> runit(const Scope& kz);

/// The variable selected by a singleton thinning.
Relev<NodePtr> rvar(const Thinning& x);

/// Debug rendering: `(t ↑ 10)`, `(pair l r LRB)`, `(1\ t)`.
std::string render(const NodePtr& node);
std::string render(const Relev<NodePtr>& r);

}  // namespace codb

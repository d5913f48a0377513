#pragma once

// Simultaneous hereditary substitution on co-de-Bruijn terms.
//
// An HSub sends every variable of `src` either to a variable of `trg`
// (passive: renamed along pass_trg) or to an image (active: replaced, with the
// image's own parameters substituted by the spine found at the use site).
// Recursion is structural on `act`: a hereditary call's new active scope is the
// parameter scope of one kind drawn from the old one.

#include <string>

#include "codb/cover.hpp"
#include "codb/desc.hpp"
#include "codb/relev.hpp"

namespace codb {

struct HSub {
  Scope src;
  Scope trg;
  Scope act;
  Scope pass;
  Thinning passive;   // pass ⊑ src
  Thinning active;    // act ⊑ src
  Thinning pass_trg;  // pass ⊑ trg
  Cover parti;        // over src, no overlap: L = passive, R = active
  Relev<NodePtr> images;  // spine for act, over trg
};

/// src = trg ++ jz: trg renamed to itself, jz replaced by the spine `images`.
HSub instantiate(const Scope& trg, const Scope& jz, const Relev<NodePtr>& images);

/// Goes under binders jz. The new variables are passive; images are thinned, not visited.
HSub wk_hsub(const HSub& h, const Scope& jz);

/// t lives over iz and psi : iz ⊑ h.src. Result is over h.trg.
Relev<NodePtr> h_sub(const Syntax& syntax, const HSub& h, const NodePtr& t, const Thinning& psi, const Sort& sort);

/// The same for a body described by `desc`.
Relev<NodePtr> h_subs(const Syntax& syntax, const Desc& desc, const HSub& h, const NodePtr& body, const Thinning& psi);

/// x : [k] ⊑ h.src applied to the already substituted spine ss (over h.trg).
Relev<NodePtr> hered(const Syntax& syntax, const Thinning& x, const HSub& h, const Relev<NodePtr>& ss);

/// `[pass:*,*|act:*] parti:LLR images:(...)`
std::string to_string(const HSub& h);

}  // namespace codb

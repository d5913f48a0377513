#pragma once

// Both interpretations of a Syntax and the translations between them.
//
// de Bruijn:     a variable is a position; unused variables are dropped at the leaves.
// co-de-Bruijn:  every node uses its whole scope; unused variables are dropped
//                as near the root as possible, by covers at pairs and usage
//                thinnings at binders.

#include <optional>
#include <string>

#include "codb/desc.hpp"
#include "codb/relev.hpp"
#include "codb/term_db.hpp"

namespace codb {

struct ValidationError {
  enum class Kind { Shape, Relevance };

  Kind kind;
  std::string path;  // e.g. "$/con/app/pair.left"
  std::string message;

  /// "ShapeError at <path>: <message>" or "RelevanceError at ...".
  std::string to_string() const;
};

/// Does t inhabit the de Bruijn interpretation of syntax at `sort` in scope kz?
std::optional<ValidationError> validate_db(const Syntax& syntax, const TermDB& t, const Scope& kz, const Sort& sort);

/// Does r inhabit the co-de-Bruijn interpretation at `sort` over ambient kz,
/// with every variable in every support actually used?
std::optional<ValidationError> validate_r(const Syntax& syntax, const Relev<NodePtr>& r, const Scope& kz,
                                          const Sort& sort);

/// de Bruijn to co-de-Bruijn. Throws ShapeError if t does not fit the syntax.
Relev<NodePtr> code(const Syntax& syntax, const TermDB& t, const Scope& kz, const Sort& sort);

/// co-de-Bruijn back to de Bruijn, composing thinnings down to each variable.
TermDB decode(const Syntax& syntax, const Relev<NodePtr>& r, const Scope& kz, const Sort& sort);

/// Renaming along theta: t over source(theta) becomes a term over target(theta).
TermDB thin_db(const Syntax& syntax, const TermDB& t, const Thinning& theta, const Sort& sort);

/// Positions of kz that occur free in t, found by a direct scan.
BitVec free_variables(const Syntax& syntax, const TermDB& t, const Scope& kz, const Sort& sort);

}  // namespace codb

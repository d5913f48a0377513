#pragma once

// S-expression interchange for both term representations.
//
//   de Bruijn:      (var I SPINE)  (con BODY)  (rec TERM)  (TAG BODY)  unit  (pair A B)
//   co-de-Bruijn:   (up TERM thin:BITS)  (hash PAIR)  (con BODY)  (bind usage:BITS TERM)
//                   (TAG BODY)  unit  only  (pair (up ..) (up ..) cover:LRB)
//
// Reading is directed by the syntax description. Bit strings must have the
// length of the scope they thin into; covers are read as given and are not
// checked against their components (validate_r does that).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "codb/desc.hpp"
#include "codb/relev.hpp"
#include "codb/term_db.hpp"

namespace codb {

struct Datum {
  bool is_atom = true;
  std::string atom;
  std::vector<Datum> items;
  std::size_t position = 0;  // byte offset in the source text

  bool is(std::string_view a) const { return is_atom && atom == a; }
  /// A list whose first item is the atom `head`.
  bool headed(std::string_view head) const { return !is_atom && !items.empty() && items[0].is(head); }
};

/// Every datum in text. `;` starts a comment running to the end of the line.
/// Throws ParseError.
std::vector<Datum> parse_datums(std::string_view text);
/// Exactly one datum.
Datum parse_datum(std::string_view text);

std::string to_string(const Datum& d);

Datum to_datum(const TermDB& t);
Datum to_datum(const NodePtr& node);
Datum to_datum(const Relev<NodePtr>& r);

std::string to_sexp(const TermDB& t);
std::string to_sexp(const Relev<NodePtr>& r);

/// Throws ShapeError when the datum does not follow the description.
TermDB db_from_datum(const Syntax& syntax, const Datum& d, const Scope& kz, const Sort& sort);
Relev<NodePtr> r_from_datum(const Syntax& syntax, const Datum& d, const Scope& kz, const Sort& sort);

}  // namespace codb

#include <doctest.h>

#include "codb/scope.hpp"

using namespace codb;

namespace {

std::vector<Scope> leaf_scopes(std::size_t max_len) {
  std::vector<Scope> out;
  for (std::size_t n = 0; n <= max_len; ++n) out.push_back(stars(n));
  return out;
}

}  // namespace

TEST_CASE("snoc appends at the newest end") {
  CHECK(snoc(Scope{}, star()) == stars(1));
  CHECK(snoc(stars(1), star()) == stars(2));
  const Kind higher{Scope{star()}, kIota};
  Scope s = snoc(stars(2), higher);
  CHECK(s.size() == 3);
  CHECK(s[2] == higher);
  CHECK(prefix(s, 2) == stars(2));
}

TEST_CASE("concat is a monoid") {
  const Kind higher{Scope{star()}, kIota};
  std::vector<Scope> scopes = leaf_scopes(4);
  scopes.push_back(Scope{higher});
  scopes.push_back(Scope{star(), higher});
  for (const auto& a : scopes) {
    CHECK(concat(a, Scope{}) == a);
    CHECK(concat(Scope{}, a) == a);
    for (const auto& b : scopes) {
      CHECK(concat(a, b).size() == a.size() + b.size());
      CHECK(prefix(concat(a, b), a.size()) == a);
      CHECK(suffix(concat(a, b), a.size()) == b);
      for (const auto& c : scopes) CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    }
  }
}

TEST_CASE("kind_size") {
  CHECK(kind_size(star()) == 1);
  const Kind one{Scope{star()}, kIota};
  const Kind two{Scope{star(), star()}, kIota};
  CHECK(kind_size(one) == 2);
  CHECK(kind_size(two) == 3);
  const Kind nested{Scope{one, two}, kIota};
  CHECK(kind_size(nested) == 6);
  for (const auto& k : nested.scope) CHECK(kind_size(k) < kind_size(nested));
  CHECK(scope_measure(Scope{one, star()}) == 3);
}

TEST_CASE("kind notation") {
  CHECK(to_string(star()) == "*");
  CHECK(to_string(Kind{Scope{star()}, kIota}) == "[*]⇒ι");
  CHECK(to_string(stars(2)) == "[*,*]");
}

#include <doctest.h>

#include <random>

#include "codb/errors.hpp"
#include "codb/lam.hpp"
#include "codb/sexp.hpp"
#include "codb/universe.hpp"
#include "support.hpp"

using namespace codb;
using testing::th;

namespace {

const Syntax& lam_syntax() { return lam::syntax(); }

// A syntax with a binder of two variables and a metavariable-carrying sort,
// to exercise spines beyond unit.
Syntax two_sorted() {
  const Sort tm{"tm"};
  const Kind x{Scope{}, tm};
  const Kind meta{Scope{x, x}, tm};
  Syntax s;
  std::map<std::string, DescPtr, std::less<>> arms;
  arms["let2"] = times_d(rec_d(x), rec_d(Kind{Scope{x, x}, tm}));
  arms["hole"] = rec_d(Kind{Scope{meta}, tm});
  arms["nil"] = one_d();
  s.define(tm, sg_d(Datoid{{"hole", "let2", "nil"}}, std::move(arms)));
  return s;
}

}  // namespace

TEST_CASE("spine_desc") {
  CHECK(*spine_desc(Scope{}) == *one_d());
  CHECK(*spine_desc(stars(1)) == *times_d(one_d(), rec_d(star())));
  const Kind k2{Scope{star()}, kIota};
  CHECK(*spine_desc(Scope{star(), k2}) == *times_d(times_d(one_d(), rec_d(star())), rec_d(k2)));
}

TEST_CASE("sg_d insists on total arms") {
  std::map<std::string, DescPtr, std::less<>> arms;
  arms["a"] = one_d();
  CHECK_THROWS_AS(sg_d(Datoid{{"a", "b"}}, arms), std::invalid_argument);
  CHECK(Datoid::decide("a", "a"));
  CHECK_FALSE(Datoid::decide("a", "b"));
}

TEST_CASE("validate_db") {
  CHECK_FALSE(validate_db(lam_syntax(), lam::abs(lam::var(0)), Scope{}, kIota));
  auto out_of_range = validate_db(lam_syntax(), lam::var(3), stars(2), kIota);
  REQUIRE(out_of_range);
  CHECK(out_of_range->kind == ValidationError::Kind::Shape);
  CHECK(out_of_range->path == "$");
  auto untagged = validate_db(lam_syntax(), make_db(DbCon{make_db(DbRec{lam::var(0)})}), stars(1), kIota);
  REQUIRE(untagged);
  CHECK(untagged->path == "$/con");
}

TEST_CASE("code of the identity") {
  auto r = lam::code(lam::abs(lam::var(0)), 0);
  CHECK(lam::pretty(r, lam::Style::CodeBruijn) == "λ (1\\ # only) ↑ ε");
  CHECK_FALSE(validate_r(lam_syntax(), r, Scope{}, kIota));
}

TEST_CASE("code is support-exact and round trips") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = rng() % 4;
    TermDB t = lam::random_term(rng, 25, k);
    auto r = code(lam_syntax(), t, stars(k), kIota);
    CHECK(r.thinning.bits() == free_variables(lam_syntax(), t, stars(k), kIota));
    CHECK_FALSE(validate_r(lam_syntax(), r, stars(k), kIota));
    CHECK(decode(lam_syntax(), r, stars(k), kIota) == t);
  }
}

TEST_CASE("validate_r finds broken covers, supports and leaves") {
  auto r = lam::code(lam::parse_index("λ. λ. 1 0"), 0);
  REQUIRE_FALSE(validate_r(lam_syntax(), r, Scope{}, kIota));

  // the outer binder claims to be used but nothing below uses it
  auto unused = r_from_datum(lam_syntax(),
                             parse_datum("(up (con (lam (bind usage:1 (con (lam (bind usage:1 "
                                         "(hash (pair (up only thin:01) (up unit thin:00) cover:RL)))))))) thin:)"),
                             Scope{}, kIota);
  auto e = validate_r(lam_syntax(), unused, Scope{}, kIota);
  REQUIRE(e);
  CHECK(e->kind == ValidationError::Kind::Relevance);
  CHECK(e->path == "$/con/lam/bind/con/lam/bind/hash");

  Relev<NodePtr> wider{r.thing, th("1")};
  auto w = validate_r(lam_syntax(), wider, stars(1), kIota);
  REQUIRE(w);
  CHECK(w->kind == ValidationError::Kind::Shape);

  NodePtr unit_in_scope = make_node(UnitLeaf{});
  Relev<NodePtr> var_spine_wrong{
      make_node(Hash{RPair{rvar(th("1")), Relev<NodePtr>{unit_in_scope, th("1")}, Cover::parse(true, "B", stars(1))}}),
      th("1")};
  auto u = validate_r(lam_syntax(), var_spine_wrong, stars(1), kIota);
  REQUIRE(u);
  CHECK(u->kind == ValidationError::Kind::Relevance);
  CHECK(u->path == "$/hash.spine");

  Relev<NodePtr> two_vars{make_node(Hash{RPair{Relev<NodePtr>{make_node(VarLeaf{}), th("11")}, runit(stars(2)),
                                               Cover::parse(true, "LL", stars(2))}}),
                          th("11")};
  auto v = validate_r(lam_syntax(), two_vars, stars(2), kIota);
  REQUIRE(v);
  CHECK(v->kind == ValidationError::Kind::Shape);
  CHECK(v->path == "$/hash.var");
}

TEST_CASE("thin_db and thin_relev commute through code") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = rng() % 3;
    TermDB t = lam::random_term(rng, 20, k);
    std::string bits(k + 2, '0');
    std::size_t placed = 0;
    for (std::size_t j = 0; j < bits.size() && placed < k; ++j) {
      if (bits.size() - j == k - placed || rng() % 2) {
        bits[j] = '1';
        ++placed;
      }
    }
    Thinning theta = th(bits);
    CHECK(lam::decode(thin_relev(theta, lam::code(t, k))) == lam::thin_db(t, theta));
  }
  CHECK(lam::thin_db(lam::var(0), th("01")) == lam::var(1));
}

TEST_CASE("a syntax with higher kinds and a two-variable binder") {
  const Syntax s = two_sorted();
  const Sort tm{"tm"};
  const Kind x{Scope{}, tm};
  const Kind meta{Scope{x, x}, tm};
  auto nil = make_db(DbCon{make_db(DbTag{"nil", db_unit()})});
  // hole binds a metavariable m of kind [x,x]⇒tm; inside, let2 binds two
  // objects and applies m to them in swapped order.
  auto spine = make_db(DbPair{make_db(DbPair{db_unit(), make_db(DbRec{make_db(DbVar{2, db_unit()})})}),
                              make_db(DbRec{make_db(DbVar{1, db_unit()})})});
  auto use = make_db(DbVar{0, spine});
  auto let2 = make_db(DbCon{make_db(DbTag{"let2", make_db(DbPair{make_db(DbRec{nil}), make_db(DbRec{use})})})});
  auto hole = make_db(DbCon{make_db(DbTag{"hole", make_db(DbRec{let2})})});
  REQUIRE_FALSE(validate_db(s, hole, Scope{}, tm));
  auto r = code(s, hole, Scope{}, tm);
  CHECK_FALSE(validate_r(s, r, Scope{}, tm));
  CHECK(decode(s, r, Scope{}, tm) == hole);
  CHECK(free_variables(s, let2, Scope{meta}, tm).to_string() == "1");
  // a spine of the wrong length is a shape error
  auto bad = make_db(DbVar{0, db_unit()});
  CHECK(validate_db(s, bad, Scope{meta}, tm));
  CHECK_THROWS_AS(code(s, bad, Scope{meta}, tm), ShapeError);
}

#include <doctest.h>

#include <random>

#include "codb/errors.hpp"
#include "codb/hsub.hpp"
#include "codb/instr.hpp"
#include "codb/lam.hpp"
#include "codb/universe.hpp"
#include "support.hpp"

using namespace codb;
using testing::th;

namespace {

const Syntax& S() { return lam::syntax(); }

NodePtr node_of(const RPair& p) { return make_node(p); }

// A spine for act = [*]: the image t (over trg) under an empty binder.
Relev<NodePtr> star_images(const Relev<NodePtr>& t) {
  auto image = map_relev([](const Bind& b) { return make_node(b); }, bind(Scope{}, t));
  return map_relev(node_of, rpair(runit(t.thinning.target()), image));
}

bool same_hsub(const HSub& a, const HSub& b) {
  return a.src == b.src && a.trg == b.trg && a.act == b.act && a.pass == b.pass && a.passive == b.passive &&
         a.active == b.active && a.pass_trg == b.pass_trg && a.parti == b.parti && a.images == b.images;
}

const Kind kUnary{Scope{star()}, kIota};

}  // namespace

TEST_CASE("instantiate") {
  HSub h = instantiate(stars(2), stars(1), star_images(lam::code(lam::var(0), 2)));
  CHECK(h.src == stars(3));
  CHECK(h.parti.to_string() == "LLR");
  CHECK_FALSE(h.parti.overlap_ok());
  CHECK(h.passive.to_string() == "110");
  CHECK(h.active.to_string() == "001");
  CHECK(h.pass_trg.is_identity());
  CHECK(to_string(h) == "[pass:[*,*]|act:[*]] parti:LLR images:((pair (⟨⟩ ↑ 0) ((ε\\ # (pair (only ↑ 1) (⟨⟩ ↑ 0) L)) ↑ 1) R) ↑ 10)");
}

TEST_CASE("wk_hsub") {
  HSub h = instantiate(stars(1), stars(1), star_images(lam::code(lam::var(0), 1)));
  CHECK(same_hsub(wk_hsub(h, Scope{}), h));
  instr::reset();
  HSub w = wk_hsub(h, stars(1));
  CHECK(instr::counters().node_visits == 0);
  CHECK(w.act == h.act);
  CHECK(w.parti.to_string() == "LRL");
  CHECK(w.images.thinning.to_string() == h.images.thinning.to_string() + "0");
  CHECK(w.images.thing.get() == h.images.thing.get());
  CHECK(w.passive.to_string() == "101");
  CHECK(w.active.to_string() == "010");
  CHECK(w.pass_trg.to_string() == "11");
  HSub w2 = wk_hsub(h, Scope{kUnary, star()});
  CHECK(w2.act == h.act);
  CHECK(w2.parti.to_string() == "LRLL");
}

TEST_CASE("fast path for closed terms and pure renamings") {
  HSub h = instantiate(stars(2), stars(1), star_images(lam::code(lam::var(1), 2)));
  auto closed = lam::code(lam::parse_index("λ. 0"), 0);
  instr::reset();
  auto r = h_sub(S(), h, closed.thing, empty(h.src), kIota);
  CHECK(instr::counters().node_visits == 0);
  CHECK(instr::counters().fast_paths == 1);
  CHECK(r.thing.get() == closed.thing.get());
  CHECK(r.thinning == empty(stars(2)));

  HSub rename = instantiate(stars(3), Scope{}, runit(stars(3)));
  auto t = lam::code(lam::parse_index("1 0", 2), 2);
  Thinning psi = th("101");
  instr::reset();
  auto moved = h_sub(S(), rename, t.thing, compose(t.thinning, psi), kIota);
  CHECK(instr::counters().node_visits == 0);
  CHECK(moved.thing.get() == t.thing.get());
  CHECK(moved.thinning == compose(compose(t.thinning, psi), rename.pass_trg));
}

TEST_CASE("passive variable keeps its spine") {
  HSub h = instantiate(stars(2), stars(1), star_images(lam::code(lam::var(0), 2)));
  {
    instr::ScopedChecking on(true);
    instr::set_fast_paths(false);
    auto x = lam::code(lam::var(1), 3);
    auto r = h_sub(S(), h, x.thing, x.thinning, kIota);
    instr::set_fast_paths(true);
    CHECK(lam::decode(r) == lam::var(1));
    CHECK(r.thinning.to_string() == "01");
  }
}

TEST_CASE("active variable of sort-only kind is replaced by its image") {
  auto u = lam::code(lam::parse_index("λ. 0 1", 2), 2);
  HSub h = instantiate(stars(2), stars(1), star_images(u));
  auto x = lam::code(lam::var(2), 3);
  auto r = h_sub(S(), h, x.thing, x.thinning, kIota);
  CHECK(r == u);
}

TEST_CASE("active higher-kinded variable substitutes its spine hereditarily") {
  // trg = [y]; m : [*]⇒ι with image \x. x y; term m(y) becomes y y.
  const Scope trg = stars(1);
  auto body = code(S(), lam::app(lam::var(1), lam::var(0)), stars(2), kIota);
  auto image = map_relev([](const Bind& b) { return make_node(b); }, bind(stars(1), body));
  auto images = map_relev(node_of, rpair(runit(trg), image));
  HSub h = instantiate(trg, Scope{kUnary}, images);

  auto spine = make_db(DbPair{db_unit(), make_db(DbRec{lam::var(0)})});
  TermDB t = make_db(DbVar{1, spine});
  const Scope src{star(), kUnary};
  REQUIRE_FALSE(validate_db(S(), t, src, kIota));
  auto ct = code(S(), t, src, kIota);

  instr::ScopedChecking on(true);
  instr::reset();
  auto r = h_sub(S(), h, ct.thing, ct.thinning, kIota);
  CHECK(lam::decode(r) == lam::app(lam::var(0), lam::var(0)));
  CHECK(instr::counters().hereditary_calls == 2);
  CHECK(instr::counters().metric_violations == 0);

  // an image that ignores its parameter never looks at the spine
  auto constant = map_relev([](const Bind& b) { return make_node(b); },
                            bind(stars(1), code(S(), lam::var(0), stars(2), kIota)));
  HSub k = instantiate(trg, Scope{kUnary}, map_relev(node_of, rpair(runit(trg), constant)));
  auto rk = h_sub(S(), k, ct.thing, ct.thinning, kIota);
  CHECK(lam::decode(rk) == lam::var(0));
}

TEST_CASE("a partition marking a variable both ways is unreachable") {
  HSub h = instantiate(stars(1), stars(1), star_images(lam::code(lam::var(0), 1)));
  h.parti = Cover::parse(true, "LB", stars(2));
  auto x = lam::code(lam::var(1), 2);
  CHECK_THROWS_AS(hered(S(), point(h.src, 1), h, runit(h.trg)), Unreachable);
  (void)x;
}

TEST_CASE("fast path agrees with full traversal") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    const std::size_t k = rng() % 3;  // |src| - 1 ranges over 0..2
    TermDB body = lam::random_term(rng, 15, k + 1);
    TermDB arg = lam::random_term(rng, 10, std::max<std::size_t>(k, 1));
    if (k == 0) arg = lam::abs(lam::var(0));
    HSub h = instantiate(stars(k), stars(1), star_images(lam::code(arg, k)));
    auto t = lam::code(body, k + 1);
    auto fast = h_sub(S(), h, t.thing, t.thinning, kIota);
    instr::set_fast_paths(false);
    auto slow = h_sub(S(), h, t.thing, t.thinning, kIota);
    instr::set_fast_paths(true);
    CHECK(fast == slow);
    CHECK_FALSE(validate_r(S(), fast, stars(k), kIota));
  }
}

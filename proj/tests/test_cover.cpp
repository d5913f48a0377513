#include <doctest.h>

#include "codb/cover.hpp"
#include "codb/errors.hpp"
#include "support.hpp"

using namespace codb;
using testing::all_covers;
using testing::all_thinnings;
using testing::th;

TEST_CASE("cover construction") {
  Cover c = Cover::parse(true, "LRB", stars(3));
  CHECK(c.left().to_string() == "101");
  CHECK(c.right().to_string() == "011");
  CHECK(c.to_string() == "LRB");
  CHECK_THROWS_AS(Cover::parse(false, "LB", stars(2)), FlagMismatch);
  CHECK_THROWS_AS(Cover::parse(true, "LR", stars(3)), ScopeMismatch);
  CHECK_THROWS_AS(Cover::parse(true, "LX", stars(2)), std::invalid_argument);
}

TEST_CASE("coproduct examples") {
  auto r = coproduct(th("10"), th("01"));
  CHECK(r.joint.to_string() == "11");
  CHECK(r.left_in.to_string() == "10");
  CHECK(r.right_in.to_string() == "01");
  CHECK(r.cover.to_string() == "LR");
  auto s = coproduct(th("11"), th("01"));
  CHECK(s.cover.to_string() == "LB");
  auto t = coproduct(th("0110"), th("0110"));
  CHECK(t.joint == th("0110"));
  CHECK(t.left_in.is_identity());
  CHECK(t.cover.to_string() == "BB");
  CHECK_THROWS_AS(coproduct(th("1"), th("10")), ScopeMismatch);
}

TEST_CASE("coproduct_factor examples") {
  auto r = coproduct(th("100"), th("001"));
  Thinning common = th("101");
  auto h = coproduct_factor(r, SliceArrow::make(th("10"), common, th("100")),
                            SliceArrow::make(th("01"), common, th("001")));
  CHECK(h.mediator().to_string() == "11");
  auto self = coproduct_factor(r, SliceArrow::make(r.left_in, r.joint, th("100")),
                               SliceArrow::make(r.right_in, r.joint, th("001")));
  CHECK(self.mediator().is_identity());
}

TEST_CASE("refine examples") {
  Cover c = Cover::parse(true, "LRB", stars(3));
  auto r = refine(th("101"), c);
  CHECK(r.cover.to_string() == "LB");
  CHECK(r.left_embed.to_string() == "11");
  CHECK(r.right_embed.to_string() == "01");
  auto full = refine(identity(stars(3)), c);
  CHECK(full.cover == c);
  CHECK(full.left_embed.is_identity());
  CHECK(full.right_embed.is_identity());
  auto none = refine(empty(stars(3)), c);
  CHECK(none.cover.size() == 0);
  CHECK(none.left_embed.is_empty());
  CHECK(none.right_embed.is_empty());
}

TEST_CASE("refine keeps the overlap flag and its squares commute") {
  for (bool ov : {true, false}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (const auto& c : all_covers(n, ov)) {
        for (const auto& psi : all_thinnings(n)) {
          auto r = refine(psi, c);
          CHECK(r.cover.overlap_ok() == ov);
          CHECK(compose(r.left, psi) == compose(r.left_embed, c.left()));
          CHECK(compose(r.right, psi) == compose(r.right_embed, c.right()));
        }
      }
    }
  }
}

TEST_CASE("concat_cover") {
  Cover lr = Cover::parse(true, "LR", stars(2));
  Cover b = Cover::parse(true, "B", stars(1));
  CHECK(concat_cover(lr, b).to_string() == "LRB");
  CHECK(concat_cover(lr, Cover(true)) == lr);
  CHECK_THROWS_AS(concat_cover(Cover::parse(false, "L", stars(1)), b), FlagMismatch);
  Cover c = concat_cover(lr, b);
  CHECK(c.left() == concat_thin(lr.left(), b.left()));
  CHECK(c.right() == concat_thin(lr.right(), b.right()));
}

TEST_CASE("left_right_cover") {
  auto lr = left_right_cover(stars(1), stars(2));
  CHECK(lr.left.to_string() == "100");
  CHECK(lr.right.to_string() == "011");
  CHECK(lr.cover.to_string() == "LRR");
  CHECK(left_right_cover(Scope{}, stars(2)).cover.to_string() == "RR");
  CHECK(left_right_cover(stars(2), Scope{}).cover.to_string() == "LL");
  CHECK_FALSE(left_right_cover(stars(1), stars(1), false).cover.overlap_ok());
  for (std::size_t i = 0; i <= 3; ++i) {
    for (std::size_t j = 0; j <= 3; ++j) {
      auto p = left_right_cover(stars(i), stars(j));
      auto [l1, l2] = split(stars(j), p.left);
      auto [r1, r2] = split(stars(j), p.right);
      CHECK(l1.is_identity());
      CHECK(l2.is_empty());
      CHECK(r1.is_empty());
      CHECK(r2.is_identity());
      CHECK(concat_cover(Cover::parse(true, std::string(i, 'L'), stars(i)),
                         Cover::parse(true, std::string(j, 'R'), stars(j))) == p.cover);
    }
  }
}

TEST_CASE("all_left") {
  CHECK(all_left(Cover::parse(false, "LLL", stars(3))));
  CHECK(all_left(Cover(false)));
  CHECK_THROWS_AS(all_left(Cover::parse(false, "LRL", stars(3))), ScopeMismatch);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& c : all_covers(n, true)) {
      if (c.right().is_empty()) {
        CHECK(all_left(c));
        CHECK(c.left().is_identity());
      }
    }
  }
}

#include "codb/cover.hpp"

#include <stdexcept>

#include "codb/errors.hpp"

namespace codb {

Cover::Cover(bool overlap_ok, std::vector<Side> shape, Scope covered)
    : overlap_ok_(overlap_ok), shape_(std::move(shape)), covered_(std::move(covered)) {
  if (shape_.size() != covered_.size()) {
    throw ScopeMismatch("cover shape of length " + std::to_string(shape_.size()) + " over a scope of " +
                        std::to_string(covered_.size()));
  }
  if (!overlap_ok_) {
    for (Side s : shape_) {
      if (s == Side::Both) throw FlagMismatch("cover without overlap permission marks a position B");
    }
  }
}

Cover Cover::parse(bool overlap_ok, std::string_view shape, Scope covered) {
  std::vector<Side> sides;
  sides.reserve(shape.size());
  for (char ch : shape) {
    switch (ch) {
      case 'L': sides.push_back(Side::Left); break;
      case 'R': sides.push_back(Side::Right); break;
      case 'B': sides.push_back(Side::Both); break;
      default: throw std::invalid_argument("cover shape may only contain L, R and B: " + std::string(shape));
    }
  }
  return Cover(overlap_ok, std::move(sides), std::move(covered));
}

Thinning Cover::left() const {
  BitVec bits(shape_.size());
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (shape_[i] != Side::Right) bits.set(i);
  }
  return Thinning(covered_, std::move(bits));
}

Thinning Cover::right() const {
  BitVec bits(shape_.size());
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (shape_[i] != Side::Left) bits.set(i);
  }
  return Thinning(covered_, std::move(bits));
}

std::string Cover::to_string() const {
  std::string out;
  out.reserve(shape_.size());
  for (Side s : shape_) out.push_back(static_cast<char>(s));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cover& c) { return os << "cover:" << c.to_string(); }

namespace {

std::vector<Side> sides_of(const BitVec& left, const BitVec& right) {
  std::vector<Side> shape;
  shape.reserve(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    shape.push_back(left.test(i) ? (right.test(i) ? Side::Both : Side::Left) : Side::Right);
  }
  return shape;
}

}  // namespace

CoproductResult coproduct(const Thinning& theta, const Thinning& phi) {
  if (!(theta.target() == phi.target())) throw ScopeMismatch("coproduct: targets differ");
  const BitVec joint_bits = theta.bits() | phi.bits();
  Thinning joint(theta.target(), joint_bits);
  Scope support = joint.source();
  Thinning left_in(support, extract(theta.bits(), joint_bits));
  Thinning right_in(support, extract(phi.bits(), joint_bits));
  Cover cover(true, sides_of(left_in.bits(), right_in.bits()), support);
  return CoproductResult{std::move(joint), std::move(left_in), std::move(right_in), std::move(cover)};
}

SliceArrow coproduct_factor(const CoproductResult& r, const SliceArrow& f, const SliceArrow& g) {
  if (!(f.base() == g.base())) throw ScopeMismatch("coproduct_factor: factorisations use different bases");
  const Thinning& base = f.base();
  if (!(base.target() == r.joint.target())) throw ScopeMismatch("coproduct_factor: base has the wrong target");
  if (!(f.total() == compose(r.left_in, r.joint)) || !(g.total() == compose(r.right_in, r.joint))) {
    throw ScopeMismatch("coproduct_factor: factorisations are not of the coproduct's summands");
  }
  Thinning mediator(base.source(), f.mediator().bits() | g.mediator().bits());
  return SliceArrow::make(std::move(mediator), base, r.joint);
}

Refinement refine(const Thinning& psi, const Cover& c) {
  if (!(psi.target() == c.covered())) throw ScopeMismatch("refine: thinning does not target the covered scope");
  std::vector<Side> shape;
  shape.reserve(psi.source_size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (psi.selects(i)) shape.push_back(c.shape()[i]);
  }
  Cover refined(c.overlap_ok(), std::move(shape), psi.source());
  const Thinning old_left = c.left();
  const Thinning old_right = c.right();
  Thinning left_embed(old_left.source(), extract(psi.bits(), old_left.bits()));
  Thinning right_embed(old_right.source(), extract(psi.bits(), old_right.bits()));
  Thinning left = refined.left();
  Thinning right = refined.right();
  return Refinement{std::move(refined), std::move(left), std::move(right), std::move(left_embed),
                    std::move(right_embed)};
}

Cover concat_cover(const Cover& c, const Cover& d) {
  if (c.overlap_ok() != d.overlap_ok()) throw FlagMismatch("concat_cover: overlap flags differ");
  std::vector<Side> shape = c.shape();
  shape.insert(shape.end(), d.shape().begin(), d.shape().end());
  return Cover(c.overlap_ok(), std::move(shape), concat(c.covered(), d.covered()));
}

LeftRightCover left_right_cover(const Scope& iz, const Scope& jz, bool overlap_ok) {
  std::vector<Side> shape(iz.size(), Side::Left);
  shape.insert(shape.end(), jz.size(), Side::Right);
  return LeftRightCover{concat_thin(identity(iz), empty(jz)), concat_thin(empty(iz), identity(jz)),
                        Cover(overlap_ok, std::move(shape), concat(iz, jz))};
}

bool all_left(const Cover& c) {
  for (Side s : c.shape()) {
    if (s != Side::Left) throw ScopeMismatch("all_left: right side of the cover is not empty");
  }
  return true;
}

}  // namespace codb

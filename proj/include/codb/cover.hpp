#pragma once

// Covers: two thinnings into one scope that between them hit every position.
// A cover is stored as its shape, one L/R/B per covered position, so no
// position can be left out.

#include <string>
#include <string_view>
#include <vector>

#include "codb/thin.hpp"

namespace codb {

enum class Side : char { Left = 'L', Right = 'R', Both = 'B' };

class Cover {
 public:
  /// The empty cover over [].
  explicit Cover(bool overlap_ok = true) : overlap_ok_(overlap_ok) {}
  /// Throws ScopeMismatch on a length mismatch and FlagMismatch when B
  /// appears without overlap permission.
  Cover(bool overlap_ok, std::vector<Side> shape, Scope covered);

  /// Shape from a string over {L,R,B}; throws std::invalid_argument on other characters.
  static Cover parse(bool overlap_ok, std::string_view shape, Scope covered);

  bool overlap_ok() const noexcept { return overlap_ok_; }
  const std::vector<Side>& shape() const noexcept { return shape_; }
  const Scope& covered() const noexcept { return covered_; }
  std::size_t size() const noexcept { return shape_.size(); }

  /// Positions marked L or B.
  Thinning left() const;
  /// Positions marked R or B.
  Thinning right() const;

  std::string to_string() const;

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  bool overlap_ok_ = true;
  std::vector<Side> shape_;
  Scope covered_;
};

/// Renders as `cover:LRB`.
std::ostream& operator<<(std::ostream& os, const Cover& c);

/// Coproduct of two thinnings in the slice over their shared target.
struct CoproductResult {
  Thinning joint;     // the union: source(joint) ⊑ target
  Thinning left_in;   // first argument's source into source(joint)
  Thinning right_in;  // second argument's source into source(joint)
  Cover cover;        // over source(joint), left_in/right_in as its sides
};

CoproductResult coproduct(const Thinning& theta, const Thinning& phi);

/// Given factorisations f of theta and g of phi through a common psi',
/// returns the unique factorisation of the joint through psi'.
SliceArrow coproduct_factor(const CoproductResult& r, const SliceArrow& f, const SliceArrow& g);

struct Refinement {
  Cover cover;           // the original cover restricted to the selected positions
  Thinning left;         // cover.left()
  Thinning right;        // cover.right()
  Thinning left_embed;   // source(left) into source(original.left())
  Thinning right_embed;  // source(right) into source(original.right())
};

/// Restricts a cover of target(psi) to the positions psi selects.
Refinement refine(const Thinning& psi, const Cover& c);

/// Covers placed side by side. Overlap flags must agree.
Cover concat_cover(const Cover& c, const Cover& d);

struct LeftRightCover {
  Thinning left;   // iz into iz ++ jz
  Thinning right;  // jz into iz ++ jz
  Cover cover;     // L for each of iz, R for each of jz
};

/// iz and jz jointly cover iz ++ jz.
LeftRightCover left_right_cover(const Scope& iz, const Scope& jz, bool overlap_ok = true);

/// For a cover whose right side selects nothing: confirms every position is L.
/// Throws ScopeMismatch when the right side is not empty.
bool all_left(const Cover& c);

}  // namespace codb

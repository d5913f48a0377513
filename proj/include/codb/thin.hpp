#pragma once

// Thinnings: order-preserving embeddings of one scope into another, kept as
// the target scope plus one bit per target position. The source scope is
// whatever the set bits pick out; it is never stored.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "codb/bits.hpp"
#include "codb/scope.hpp"

namespace codb {

class Thinning {
 public:
  /// The empty thinning [] ⊑ [].
  Thinning() = default;
  /// Throws ScopeMismatch unless bits.size() == target.size().
  Thinning(Scope target, BitVec bits);

  /// Thinning into `stars(bits.size())`, from a string over {0,1}.
  static Thinning over_stars(std::string_view bits);

  const Scope& target() const noexcept { return target_; }
  const BitVec& bits() const noexcept { return bits_; }
  std::size_t target_size() const noexcept { return bits_.size(); }
  std::size_t source_size() const noexcept { return bits_.count(); }
  Scope source() const;
  bool selects(std::size_t i) const noexcept { return bits_.test(i); }

  bool is_identity() const noexcept { return bits_.all(); }
  bool is_empty() const noexcept { return bits_.none(); }

  /// Bits oldest first, e.g. "10001".
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const Thinning&, const Thinning&) = default;

 private:
  Scope target_;
  BitVec bits_;
};

/// Renders as `⊑:10001`.
std::ostream& operator<<(std::ostream& os, const Thinning& th);

/// True iff source(th) is structurally equal to kz.
bool source_is(const Thinning& th, const Scope& kz);

Thinning identity(const Scope& kz);
Thinning empty(const Scope& kz);

/// theta then phi: source(theta) into target(phi). Needs source(phi) = target(theta).
Thinning compose(const Thinning& theta, const Thinning& phi);

/// True iff compose(theta, phi) == psi. Boundary scopes must line up.
bool is_triangle(const Thinning& theta, const Thinning& phi, const Thinning& psi);

/// A verified factorisation: compose(mediator, base) == total.
class SliceArrow {
 public:
  /// Throws ScopeMismatch when the triangle does not commute.
  static SliceArrow make(Thinning mediator, Thinning base, Thinning total);

  const Thinning& mediator() const noexcept { return mediator_; }
  const Thinning& base() const noexcept { return base_; }
  const Thinning& total() const noexcept { return total_; }

 private:
  SliceArrow(Thinning mediator, Thinning base, Thinning total)
      : mediator_(std::move(mediator)), base_(std::move(base)), total_(std::move(total)) {}

  Thinning mediator_;
  Thinning base_;
  Thinning total_;
};

/// The unique theta with compose(theta, phi) == psi, if psi's selection lies
/// inside phi's. Targets must agree.
std::optional<SliceArrow> factor_through(const Thinning& psi, const Thinning& phi);

/// For opposed thinnings theta : iz ⊑ jz and phi : jz ⊑ iz, checks that both are identities.
bool antisym(const Thinning& theta, const Thinning& phi);

/// Singleton thinning selecting position i of kz.
Thinning point(const Scope& kz, std::size_t i);

/// Side-by-side: target and source both concatenate.
Thinning concat_thin(const Thinning& theta, const Thinning& phi);

/// Inverse of concat_thin: cuts psi into the part over the first
/// |target| - |jz| positions and the part over jz.
std::pair<Thinning, Thinning> split(const Scope& jz, const Thinning& psi);

}  // namespace codb

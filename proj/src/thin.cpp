#include "codb/thin.hpp"

#include "codb/errors.hpp"

namespace codb {

Thinning::Thinning(Scope target, BitVec bits) : target_(std::move(target)), bits_(std::move(bits)) {
  if (target_.size() != bits_.size()) {
    throw ScopeMismatch("thinning has " + std::to_string(bits_.size()) + " bits for a scope of " +
                        std::to_string(target_.size()));
  }
}

Thinning Thinning::over_stars(std::string_view bits) {
  return Thinning(stars(bits.size()), BitVec::from_string(bits));
}

Scope Thinning::source() const {
  std::vector<Kind> kinds;
  kinds.reserve(source_size());
  for (std::size_t i = 0; i < target_size(); ++i) {
    if (bits_.test(i)) kinds.push_back(target_[i]);
  }
  return Scope(std::move(kinds));
}

std::ostream& operator<<(std::ostream& os, const Thinning& th) { return os << "⊑:" << th.to_string(); }

bool source_is(const Thinning& th, const Scope& kz) {
  if (th.source_size() != kz.size()) return false;
  std::size_t j = 0;
  for (std::size_t i = 0; i < th.target_size(); ++i) {
    if (th.selects(i) && !(th.target()[i] == kz[j++])) return false;
  }
  return true;
}

Thinning identity(const Scope& kz) { return Thinning(kz, BitVec(kz.size(), true)); }

Thinning empty(const Scope& kz) { return Thinning(kz, BitVec(kz.size(), false)); }

Thinning compose(const Thinning& theta, const Thinning& phi) {
  if (!source_is(phi, theta.target())) {
    throw ScopeMismatch("compose: source of " + phi.to_string() + " is not the target of " + theta.to_string());
  }
  return Thinning(phi.target(), deposit(theta.bits(), phi.bits()));
}

bool is_triangle(const Thinning& theta, const Thinning& phi, const Thinning& psi) {
  if (!source_is(phi, theta.target()) || !(phi.target() == psi.target()) ||
      theta.source_size() != psi.source_size() || !(theta.source() == psi.source())) {
    throw ScopeMismatch("is_triangle: boundaries of " + theta.to_string() + ", " + phi.to_string() + ", " +
                        psi.to_string() + " do not line up");
  }
  return compose(theta, phi) == psi;
}

SliceArrow SliceArrow::make(Thinning mediator, Thinning base, Thinning total) {
  if (!(compose(mediator, base) == total)) {
    throw ScopeMismatch("slice arrow: " + mediator.to_string() + " ; " + base.to_string() + " is not " +
                        total.to_string());
  }
  return SliceArrow(std::move(mediator), std::move(base), std::move(total));
}

std::optional<SliceArrow> factor_through(const Thinning& psi, const Thinning& phi) {
  if (!(psi.target() == phi.target())) {
    throw ScopeMismatch("factor_through: targets differ");
  }
  if (!psi.bits().is_subset_of(phi.bits())) return std::nullopt;
  Thinning mediator(phi.source(), extract(psi.bits(), phi.bits()));
  return SliceArrow::make(std::move(mediator), phi, psi);
}

bool antisym(const Thinning& theta, const Thinning& phi) {
  if (!source_is(phi, theta.target()) || !source_is(theta, phi.target())) {
    throw ScopeMismatch("antisym: thinnings are not opposed");
  }
  return theta.is_identity() && phi.is_identity() && theta.target() == phi.target();
}

Thinning point(const Scope& kz, std::size_t i) {
  if (i >= kz.size()) {
    throw IndexOutOfRange("position " + std::to_string(i) + " in a scope of " + std::to_string(kz.size()));
  }
  BitVec bits(kz.size());
  bits.set(i);
  return Thinning(kz, std::move(bits));
}

Thinning concat_thin(const Thinning& theta, const Thinning& phi) {
  return Thinning(concat(theta.target(), phi.target()), BitVec::concat(theta.bits(), phi.bits()));
}

std::pair<Thinning, Thinning> split(const Scope& jz, const Thinning& psi) {
  const std::size_t total = psi.target_size();
  if (total < jz.size()) {
    throw ScopeMismatch("split: " + std::to_string(jz.size()) + " local positions exceed target of " +
                        std::to_string(total));
  }
  const std::size_t global = total - jz.size();
  for (std::size_t i = 0; i < jz.size(); ++i) {
    if (!(psi.target()[global + i] == jz[i])) throw ScopeMismatch("split: local scope does not match target suffix");
  }
  return {Thinning(prefix(psi.target(), global), psi.bits().slice(0, global)),
          Thinning(jz, psi.bits().slice(global, jz.size()))};
}

}  // namespace codb

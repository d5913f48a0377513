#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace codb {

/// An object sort. Compared by name.
struct Sort {
  std::string name;

  friend bool operator==(const Sort&, const Sort&) = default;
  friend auto operator<=>(const Sort&, const Sort&) = default;
};

/// The single sort used by the untyped lambda calculus.
inline const Sort kIota{"ι"};

struct Kind;

/// Variables in scope, oldest first. Extending a scope appends on the right.
class Scope {
 public:
  Scope() = default;
  Scope(std::initializer_list<Kind> kinds);
  explicit Scope(std::vector<Kind> kinds);

  std::size_t size() const noexcept { return kinds_.size(); }
  bool empty() const noexcept { return kinds_.empty(); }
  const Kind& operator[](std::size_t i) const { return kinds_[i]; }
  const Kind& at(std::size_t i) const { return kinds_.at(i); }
  const std::vector<Kind>& kinds() const noexcept { return kinds_; }

  auto begin() const noexcept { return kinds_.begin(); }
  auto end() const noexcept { return kinds_.end(); }

  friend bool operator==(const Scope& a, const Scope& b);

 private:
  std::vector<Kind> kinds_;
};

/// A variable's interface: the parameters it binds and the sort it produces.
/// Sort-only kinds are object variables; anything else is a metavariable.
struct Kind {
  Scope scope;
  Sort sort;

  friend bool operator==(const Kind& a, const Kind& b) { return a.sort == b.sort && a.scope == b.scope; }
};

/// The kind `[] => ι`, written `*`.
Kind star();
/// `n` copies of `*`.
Scope stars(std::size_t n);

Scope snoc(const Scope& kz, const Kind& k);
Scope concat(const Scope& kz, const Scope& jz);
/// The first `n` kinds of `kz`.
Scope prefix(const Scope& kz, std::size_t n);
/// Everything after the first `n` kinds of `kz`.
Scope suffix(const Scope& kz, std::size_t n);

std::size_t kind_size(const Kind& k);
/// Sum of kind_size over a scope; the termination measure of substitution.
std::size_t scope_measure(const Scope& kz);

std::string to_string(const Kind& k);
std::string to_string(const Scope& kz);

}  // namespace codb

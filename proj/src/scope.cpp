#include "codb/scope.hpp"

namespace codb {

Scope::Scope(std::initializer_list<Kind> kinds) : kinds_(kinds) {}

Scope::Scope(std::vector<Kind> kinds) : kinds_(std::move(kinds)) {}

bool operator==(const Scope& a, const Scope& b) { return a.kinds_ == b.kinds_; }

Kind star() { return Kind{Scope{}, kIota}; }

Scope stars(std::size_t n) { return Scope(std::vector<Kind>(n, star())); }

Scope snoc(const Scope& kz, const Kind& k) {
  std::vector<Kind> kinds = kz.kinds();
  kinds.push_back(k);
  return Scope(std::move(kinds));
}

Scope concat(const Scope& kz, const Scope& jz) {
  if (jz.empty()) return kz;
  if (kz.empty()) return jz;
  std::vector<Kind> kinds;
  kinds.reserve(kz.size() + jz.size());
  kinds.insert(kinds.end(), kz.begin(), kz.end());
  kinds.insert(kinds.end(), jz.begin(), jz.end());
  return Scope(std::move(kinds));
}

Scope prefix(const Scope& kz, std::size_t n) {
  return Scope(std::vector<Kind>(kz.begin(), kz.begin() + static_cast<std::ptrdiff_t>(n)));
}

Scope suffix(const Scope& kz, std::size_t n) {
  return Scope(std::vector<Kind>(kz.begin() + static_cast<std::ptrdiff_t>(n), kz.end()));
}

std::size_t kind_size(const Kind& k) {
  std::size_t total = 1;
  for (const Kind& param : k.scope) total += kind_size(param);
  return total;
}

std::size_t scope_measure(const Scope& kz) {
  std::size_t total = 0;
  for (const Kind& k : kz) total += kind_size(k);
  return total;
}

std::string to_string(const Kind& k) {
  if (k.scope.empty() && k.sort == kIota) return "*";
  return to_string(k.scope) + "⇒" + k.sort.name;
}

std::string to_string(const Scope& kz) {
  std::string out = "[";
  for (std::size_t i = 0; i < kz.size(); ++i) {
    if (i != 0) out += ",";
    out += to_string(kz[i]);
  }
  return out + "]";
}

}  // namespace codb

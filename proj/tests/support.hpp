#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "codb/cover.hpp"
#include "codb/thin.hpp"

namespace testing {

inline codb::Thinning th(std::string_view bits) { return codb::Thinning::over_stars(bits); }

inline std::string bit_string(unsigned long long mask, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) s[i] = '1';
  }
  return s;
}

/// Every thinning into a scope of n stars.
inline std::vector<codb::Thinning> all_thinnings(std::size_t n) {
  std::vector<codb::Thinning> out;
  for (unsigned long long m = 0; m < (1ull << n); ++m) out.push_back(th(bit_string(m, n)));
  return out;
}

/// Every thinning from m stars into n stars.
inline std::vector<codb::Thinning> thinnings(std::size_t m, std::size_t n) {
  std::vector<codb::Thinning> out;
  for (auto& t : all_thinnings(n)) {
    if (t.source_size() == m) out.push_back(std::move(t));
  }
  return out;
}

/// Every cover of n stars with the given overlap permission.
inline std::vector<codb::Cover> all_covers(std::size_t n, bool overlap_ok) {
  std::vector<codb::Cover> out;
  const std::size_t base = overlap_ok ? 3 : 2;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= base;
  for (std::size_t code = 0; code < total; ++code) {
    std::string shape;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      shape += "LRB"[c % base];
      c /= base;
    }
    out.push_back(codb::Cover::parse(overlap_ok, shape, codb::stars(n)));
  }
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace testing

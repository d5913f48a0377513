#include "codb/kernels.hpp"

#include <bit>

namespace codb::kernels {
namespace {

// Reference kernels: one bit at a time, no word tricks beyond ctz.

bool read_bit(const std::uint64_t* stream, std::size_t i) {
  return (stream[i >> 6] >> (i & 63)) & 1u;
}

void deposit_scalar(const std::uint64_t* src, const std::uint64_t* mask, std::uint64_t* out,
                    std::size_t words) {
  std::size_t next = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t m = mask[w];
    std::uint64_t result = 0;
    while (m != 0) {
      const int b = std::countr_zero(m);
      if (read_bit(src, next++)) result |= std::uint64_t{1} << b;
      m &= m - 1;
    }
    out[w] = result;
  }
}

void extract_scalar(const std::uint64_t* src, const std::uint64_t* mask, std::uint64_t* out,
                    std::size_t words) {
  std::size_t next = 0;
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(mask[w]));
  for (std::size_t w = 0; w < (total + 63) / 64; ++w) out[w] = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t m = mask[w];
    while (m != 0) {
      const int b = std::countr_zero(m);
      if ((src[w] >> b) & 1u) out[next >> 6] |= std::uint64_t{1} << (next & 63);
      ++next;
      m &= m - 1;
    }
  }
}

std::size_t popcount_scalar(const std::uint64_t* words, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < n; ++w) {
    std::uint64_t v = words[w];
    while (v != 0) {
      v &= v - 1;
      ++total;
    }
  }
  return total;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", deposit_scalar, extract_scalar, popcount_scalar};
  return table;
}

}  // namespace codb::kernels

// Compiled with -mbmi2 -mpopcnt; only reached after a runtime CPU check.

#include "codb/kernels.hpp"

#include <immintrin.h>

namespace codb::kernels {
namespace {

inline std::uint64_t low_mask(unsigned k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// k bits of the packed stream starting at bit `offset`; k <= 64.
inline std::uint64_t read_bits(const std::uint64_t* stream, std::size_t offset, unsigned k) {
  if (k == 0) return 0;
  const std::size_t word = offset >> 6;
  const unsigned shift = offset & 63;
  std::uint64_t v = stream[word] >> shift;
  if (shift != 0 && shift + k > 64) v |= stream[word + 1] << (64 - shift);
  return v & low_mask(k);
}

inline void write_bits(std::uint64_t* stream, std::size_t offset, std::uint64_t v, unsigned k) {
  if (k == 0) return;
  const std::size_t word = offset >> 6;
  const unsigned shift = offset & 63;
  stream[word] |= v << shift;
  if (shift != 0 && shift + k > 64) stream[word + 1] |= v >> (64 - shift);
}

void deposit_bmi2(const std::uint64_t* src, const std::uint64_t* mask, std::uint64_t* out,
                  std::size_t words) {
  std::size_t offset = 0;
  for (std::size_t w = 0; w < words; ++w) {
    const auto k = static_cast<unsigned>(_mm_popcnt_u64(mask[w]));
    out[w] = _pdep_u64(read_bits(src, offset, k), mask[w]);
    offset += k;
  }
}

void extract_bmi2(const std::uint64_t* src, const std::uint64_t* mask, std::uint64_t* out,
                  std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += _mm_popcnt_u64(mask[w]);
  for (std::size_t w = 0; w < (total + 63) / 64; ++w) out[w] = 0;
  std::size_t offset = 0;
  for (std::size_t w = 0; w < words; ++w) {
    const auto k = static_cast<unsigned>(_mm_popcnt_u64(mask[w]));
    write_bits(out, offset, _pext_u64(src[w], mask[w]), k);
    offset += k;
  }
}

std::size_t popcount_bmi2(const std::uint64_t* words, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < n; ++w) total += _mm_popcnt_u64(words[w]);
  return total;
}

}  // namespace

namespace detail {
const KernelTable* bmi2_table() {
  static const KernelTable table{"bmi2", deposit_bmi2, extract_bmi2, popcount_bmi2};
  return &table;
}
}  // namespace detail

}  // namespace codb::kernels

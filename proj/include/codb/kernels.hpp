#pragma once

// Word-level kernels behind thinning arithmetic. Every kernel exists in a
// portable scalar form; a BMI2 (pdep/pext) form is compiled on x86-64 and
// chosen at runtime when the CPU supports it. Both must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace codb::kernels {

struct KernelTable {
  std::string_view name;

  // Scatters the low popcount(mask) bits of the packed stream `src` onto the
  // set positions of `mask`. `out` has `words` words and is overwritten.
  void (*deposit)(const std::uint64_t* src, const std::uint64_t* mask, std::uint64_t* out,
                  std::size_t words);

  // Gathers the bits of `src` at the set positions of `mask` into a packed
  // stream. `out` holds ceil(popcount(mask)/64) words and is overwritten.
  void (*extract)(const std::uint64_t* src, const std::uint64_t* mask, std::uint64_t* out,
                  std::size_t words);

  std::size_t (*popcount)(const std::uint64_t* words, std::size_t n);
};

const KernelTable& scalar();

/// nullptr when the BMI2 variant was not compiled in or the CPU lacks it.
const KernelTable* bmi2();

/// Kernels currently in use. Defaults to the best supported variant;
/// the CODB_KERNELS environment variable ("scalar" or "bmi2") overrides.
const KernelTable& active();

/// Switches the active table by name. Returns false if unavailable.
bool use(std::string_view name);

/// Names of every variant usable on this machine, scalar first.
std::vector<std::string_view> available();

namespace detail {
const KernelTable* bmi2_table();  // defined only when compiled with BMI2 support
}

}  // namespace codb::kernels

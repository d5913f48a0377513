#include "codb/instr.hpp"

namespace codb::instr {
namespace {

#ifdef NDEBUG
constexpr bool kDefaultChecking = false;
#else
constexpr bool kDefaultChecking = true;
#endif

thread_local Counters tls_counters;
thread_local bool tls_checking = kDefaultChecking;
thread_local bool tls_fast_paths = true;

}  // namespace

Counters& counters() noexcept { return tls_counters; }

void reset() noexcept { tls_counters = Counters{}; }

bool checking() noexcept { return tls_checking; }

void set_checking(bool on) noexcept { tls_checking = on; }

bool fast_paths_enabled() noexcept { return tls_fast_paths; }

void set_fast_paths(bool on) noexcept { tls_fast_paths = on; }

}  // namespace codb::instr

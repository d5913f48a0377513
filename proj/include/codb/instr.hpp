#pragma once

// Per-thread operation counters. They exist to make claims about traversal
// checkable: "this operation looked at no term nodes" becomes "the counter
// did not move".

#include <cstdint>

namespace codb::instr {

struct Counters {
  std::uint64_t node_visits = 0;        // term nodes inspected by substitution
  std::uint64_t search_visits = 0;      // nodes inspected while looking for a redex
  std::uint64_t naive_visits = 0;       // nodes inspected by the de Bruijn oracle
  std::uint64_t fast_paths = 0;         // substitutions answered by thinning alone
  std::uint64_t hereditary_calls = 0;   // active-variable hits that recurse
  std::uint64_t metric_violations = 0;  // hereditary calls whose active measure failed to drop
};

Counters& counters() noexcept;
void reset() noexcept;

inline void visit() noexcept { ++counters().node_visits; }

/// Whether operations re-validate their results (slow; on by default in debug builds).
bool checking() noexcept;
void set_checking(bool on) noexcept;

/// Whether substitution may answer by thinning alone when nothing active is in
/// scope. Switched off only to compare against the full traversal.
bool fast_paths_enabled() noexcept;
void set_fast_paths(bool on) noexcept;

class ScopedChecking {
 public:
  explicit ScopedChecking(bool on) noexcept : previous_(checking()) { set_checking(on); }
  ~ScopedChecking() { set_checking(previous_); }
  ScopedChecking(const ScopedChecking&) = delete;
  ScopedChecking& operator=(const ScopedChecking&) = delete;

 private:
  bool previous_;
};

}  // namespace codb::instr

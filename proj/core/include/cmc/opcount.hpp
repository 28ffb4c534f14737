#pragma once

#include <cstdint>

namespace cmc::opcount {

// Tallies of exact scalar work done since the last reset. Additions
// counts rational + and -, multiplications counts * and /, and
// minor_evaluations counts evaluated minors. Counters are thread-local,
// so each thread observes only its own work.
struct Counters {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t minor_evaluations = 0;

  std::uint64_t scalar_ops() const { return additions + multiplications; }
};

Counters& counters();
void reset();

}  // namespace cmc::opcount

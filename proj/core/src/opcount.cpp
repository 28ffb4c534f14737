#include "cmc/opcount.hpp"

namespace cmc::opcount {

namespace {
thread_local Counters tally;
}

Counters& counters() { return tally; }

void reset() { tally = Counters{}; }

}  // namespace cmc::opcount

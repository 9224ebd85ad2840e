#pragma once

#include <ostream>

namespace ckfrac::selftest {

// Fast invariant checks across all modules; prints one line per check.
// Returns true when everything passes.
bool run(std::ostream& os);

}  // namespace ckfrac::selftest

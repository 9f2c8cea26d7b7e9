#pragma once

#include <stdexcept>
#include <string>

namespace itq {

// Always-on internal consistency check, used where two independent
// computation routes must agree.  A failure is a bug in this library (or a
// broken build), never bad input, hence logic_error.
inline void internal_check(bool ok, const char* what) {
  if (!ok)
    throw std::logic_error(std::string("internal consistency check failed: ") + what);
}

}  // namespace itq

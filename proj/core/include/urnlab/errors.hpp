#pragma once

#include <stdexcept>
#include <string>

namespace urnlab {

/// Raised when a computed probability vector or statistic is not finite, or
/// carries negative mass beyond rounding. Distinct from argument errors so the
/// harness can map it to its own exit status.
class numeric_integrity_error : public std::runtime_error {
 public:
  explicit numeric_integrity_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace urnlab

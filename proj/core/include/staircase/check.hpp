#pragma once

#include <string>

namespace staircase {

// One named verification outcome. `witness` carries the value or counter
// example that justifies the verdict.
struct CheckResult {
  std::string name;
  std::string hypothesis;
  bool passed = false;
  std::string witness;
};

}  // namespace staircase

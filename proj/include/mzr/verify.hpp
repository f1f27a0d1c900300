#pragma once

#include <string>
#include <vector>

namespace mzr {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured error
  double tolerance = 0.0;
};

/// Fast self-checks on small problems: stress identity against the direct
/// double sum, macro-step Jacobian against finite differences, LSTM and
/// coupled gradients against central differences. Takes a few seconds.
std::vector<CheckResult> run_verify();

}  // namespace mzr

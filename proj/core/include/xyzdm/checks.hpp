#pragma once

#include <string>
#include <vector>

namespace xyzdm {

struct CheckResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured worst cases against the pinned bounds
};

// The ten release checks, in order, each independent: an exception inside
// one is reported as that check's failure and the rest still run. threads
// parallelizes the recipe-grid scan; <= 0 picks the hardware count.
std::vector<CheckResult> run_acceptance_checks(int threads = 0);

}  // namespace xyzdm

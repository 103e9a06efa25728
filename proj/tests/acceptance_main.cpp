#include <cstdio>

#include "xyzdm/checks.hpp"

// Runs the full acceptance suite and prints one verdict line per check.
// Exit 0 when everything passed, 2 otherwise.
int main() {
  const std::vector<xyzdm::CheckResult> results = xyzdm::run_acceptance_checks();
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %s: %s\n", r.passed ? "PASS" : "FAIL", r.index,
                r.name.c_str(), r.detail.c_str());
    if (r.passed) ++passed;
  }
  std::printf("%zu of %zu checks passed\n", passed, results.size());
  return passed == results.size() ? 0 : 2;
}

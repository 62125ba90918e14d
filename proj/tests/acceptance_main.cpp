// Runs every acceptance criterion at its full range and prints one line per criterion.
#include "hallprim/acceptance.hpp"

#include <cstdio>
#include <iostream>

int main() {
  using namespace hallprim;
  int failed = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    CriterionResult r = run_criterion(id, false);
    if (!r.passed) ++failed;
    std::printf("criterion %2d: %s  %s  (%.1fs)\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (const auto& note : r.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", kCriterionCount - failed, kCriterionCount);
  return failed == 0 ? 0 : 1;
}

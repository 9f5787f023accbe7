// Runs the seven acceptance criteria at their full bounds and prints one
// PASS/FAIL line each. Exit status is nonzero if any criterion fails.
#include <cstdio>

#include "lattice_stairs/verify.hpp"

namespace ls = lattice_stairs;

int main() {
  const ls::CheckFn criteria[] = {
      ls::check_sturmian_equivalence, ls::check_staircase_recursion, ls::check_staircase_symmetries,
      ls::check_cone_gf,              ls::check_carlitz,             ls::check_white,
      ls::check_positivity,
  };
  ls::VerifyOptions opt;
  bool all = true;
  int index = 1;
  for (const auto& check : criteria) {
    ls::CheckResult r = check(opt);
    all = all && r.passed;
    std::printf("%s criterion %d: %s (%llu cases, %.2f s)\n", r.passed ? "PASS" : "FAIL", index++, r.title.c_str(),
                static_cast<unsigned long long>(r.cases), r.seconds);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}

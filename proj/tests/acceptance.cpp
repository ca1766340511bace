// Acceptance run: every criterion of the full profile, one line each.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "verify.hpp"

int main() {
  using namespace braidrack::report;
  VerifyOptions opts;
  opts.profile = Profile::Full;
  Report rep = verify_paper(opts);
  for (const auto& c : rep.criteria) {
    std::cout << c.id << " " << (c.passed() ? "PASS" : "FAIL") << "  " << c.title << "  (" << std::fixed << std::setprecision(0)
              << c.elapsed_ms << " ms";
    if (c.budget_ms > 0) std::cout << ", budget " << c.budget_ms << " ms";
    std::cout << ")\n";
    for (const auto& e : c.entries)
      if (!e.match) std::cout << "    mismatch: " << e.check << ": expected " << e.expected << ", got " << e.computed << "\n";
  }
  std::cout << (rep.passed() ? "all criteria pass" : "some criteria fail") << "\n";
  return rep.passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}

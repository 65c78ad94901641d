#include <cstdio>
#include <iostream>

#include "schurk/verify.hpp"

using namespace schurk;

int main() {
  set_default_digits(env_default_digits());
  int failed = 0;
  for (const auto& r : run_suites("criteria")) {
    bool ok = r.passed();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS " : "FAIL ") << r.name << "  " << r.title << "  (" << r.checks << " checks";
    if (r.failures) std::cout << ", " << r.failures << " failed";
    std::cout << ")";
    if (!r.report.empty()) std::cout << "  " << r.report.dump();
    std::cout << "\n";
    if (!r.error.empty()) std::cout << "    error: " << r.error << "\n";
    for (const auto& m : r.messages) std::cout << "    " << m << "\n";
  }
  std::cout << (failed ? "acceptance: FAILED " : "acceptance: all criteria passed") ;
  if (failed) std::cout << failed;
  std::cout << std::endl;
  return failed ? 1 : 0;
}

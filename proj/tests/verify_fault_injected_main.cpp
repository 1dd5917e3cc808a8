// Deliberately broken build of the verification runner: the fast satisfying
// checker is replaced by one that accepts everything. The suite must catch
// it, name the failing check with a counterexample, and exit non-zero.

#include <cstdlib>
#include <iostream>

#include "wilfcheck/verify.hpp"

int main(int argc, char** argv) {
  int n_max = 4;
  if (argc > 1) n_max = std::atoi(argv[1]);
  wilfcheck::VerifyHooks hooks;
  hooks.satisfying_fast = [](const wilfcheck::Permutation&) { return true; };
  const wilfcheck::VerifyReport report = wilfcheck::verify_suite(n_max, hooks);
  wilfcheck::print_report(report, std::cout);
  return report.all_passed() ? 0 : 1;
}

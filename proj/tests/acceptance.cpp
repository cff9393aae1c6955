// One line per acceptance criterion; exit status 0 iff all pass.

#include <iostream>

#include "wnov/verify.hpp"

int main() {
  bool ok = true;
  wnov::run_suite(wnov::Suite::all, [&](wnov::CriterionResult const& r) {
    ok = ok && r.pass;
    std::cout << wnov::format_result(r) << std::endl;
  });
  std::cout << (ok ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return ok ? 0 : 1;
}

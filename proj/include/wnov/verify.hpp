#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wnov {

  struct CriterionResult {
    unsigned    id = 0;
    std::string name;
    bool        pass = false;
    std::string detail;
    double      seconds = 0;
    double      budget  = 0;  // seconds; exceeding it fails the criterion
  };

  enum class Suite { tables, oracle, corollaries, all };

  Suite                 parse_suite(std::string_view name);
  std::vector<unsigned> suite_criteria(Suite s);

  // Runs one acceptance criterion (1..8). Exceptions are reported as a
  // failure with the message as detail.
  CriterionResult run_criterion(unsigned id);

  std::vector<CriterionResult> run_suite(
      Suite s, std::function<void(CriterionResult const&)> const& on_result = {});

  // "[PASS] 3 dimension-cross-check (1.20 s / 300 s): detail"
  std::string format_result(CriterionResult const& r);

}  // namespace wnov

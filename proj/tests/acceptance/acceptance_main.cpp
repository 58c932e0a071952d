// Runs the twelve acceptance criteria and prints one PASS/FAIL line for
// each.  Exits nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "wordmetrics/acceptance.hpp"

int main(int argc, char** argv) {
  wordmetrics::AcceptanceOptions options;
  if (argc > 1) {
    options.seed = std::strtoull(argv[1], nullptr, 10);
  }
  int failed = 0;
  wordmetrics::run_acceptance(options, [&](const wordmetrics::CriterionResult& r) {
    std::cout << wordmetrics::criterion_line(r) << std::endl;
    if (r.passed()) {
      return;
    }
    ++failed;
    for (const auto& item : r.report.items()) {
      if (item.ok()) {
        continue;
      }
      std::cout << "    FAIL " << item.name << " (" << item.violations << " of " << item.checked
                << ")\n";
      for (const auto& w : item.witnesses) {
        std::cout << "         " << w << "\n";
      }
    }
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}

#ifndef NAD_ACCEPTANCE_HPP
#define NAD_ACCEPTANCE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nad::acceptance {

struct CriterionResult {
  int number;
  std::string name;
  bool passed;
  std::string detail;  // first failure witness, or a short summary
};

std::vector<CriterionResult> run_all();

/// Prints one PASS/FAIL line per criterion; returns true iff all passed.
bool run_and_report(std::ostream& out);

}  // namespace nad::acceptance

#endif

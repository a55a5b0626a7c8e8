#pragma once

#include <string>
#include <vector>

namespace arh::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds on one core

  bool pass() const;
};

inline constexpr int kCriterionCount = 10;

CriterionReport run_criterion(int id);

// Named groups of criteria: tables, shimura, bounds, periods, oracle,
// faltings, fermat, specfun, concavity, fast (everything but the oracle), all.
const std::vector<std::string>& suite_names();
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace arh::verify

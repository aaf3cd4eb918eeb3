#pragma once

#include <functional>
#include <string>
#include <vector>

namespace parteq::suite {

enum class Outcome { pass, fail, inconclusive };
const char* outcome_name(Outcome o);  // "PASS", "FAIL", "INCONCLUSIVE"

struct CriterionResult {
  Outcome outcome = Outcome::fail;
  std::string summary;
  std::vector<std::string> details;
  double seconds = 0;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<int> sections;  // section numbers the check covers
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& criteria();

// "all", "3", "§3", "sec3" or "C7"; throws InvalidArgument for anything else or an empty selection.
std::vector<const Criterion*> select(const std::string& tag);

// Runs one criterion; exceptions become a FAIL with the message (BudgetExceeded gives INCONCLUSIVE).
CriterionResult run(const Criterion& c);

// 0 if every result passed, 2 if the only non-passes are inconclusive, else 1.
int exit_code(const std::vector<CriterionResult>& results);

}  // namespace parteq::suite

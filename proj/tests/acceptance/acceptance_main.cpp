// Runs the acceptance criteria: one PASS/FAIL line each, details indented below.
// Usage: parteq_acceptance [--only N] [--quiet]

#include "parteq/suite.hpp"

#include <cstdio>
#include <cstring>
#include <string>

using namespace parteq;

int main(int argc, char** argv) {
  int only = 0;
  bool quiet = false;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--only") == 0 && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else if (std::strcmp(argv[k], "--quiet") == 0) {
      quiet = true;
    } else {
      std::fprintf(stderr, "usage: %s [--only N] [--quiet]\n", argv[0]);
      return 64;
    }
  }

  std::vector<suite::CriterionResult> results;
  for (const auto& c : suite::criteria()) {
    if (only && c.id != only) continue;
    auto r = suite::run(c);
    std::printf("%s C%d: %s (%.2f s)\n", suite::outcome_name(r.outcome), c.id, r.summary.c_str(), r.seconds);
    if (!quiet)
      for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    results.push_back(std::move(r));
  }
  if (results.empty()) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 64;
  }
  return suite::exit_code(results);
}

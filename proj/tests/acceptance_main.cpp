// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. Uses GENHECKE_DATA_DIR (or ./data) for the shipped data files.
#include <cstdlib>
#include <iostream>

#include "genhecke/acceptance.hpp"
#include "genhecke/presentation.hpp"

int main() {
  genhecke::AcceptanceOptions opts;
  opts.data_dir = genhecke::default_data_dir();
  opts.seed = 1;
  bool all = true;
  try {
    auto results = genhecke::run_acceptance(opts, [&](const genhecke::CriterionResult& r) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.detail << " ["
                << static_cast<long>(r.wall_ms) << " ms]" << std::endl;
    });
    for (const auto& r : results) all &= r.pass;
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (all ? "ACCEPTANCE: all criteria certified" : "ACCEPTANCE: FAILURES") << std::endl;
  return all ? 0 : 1;
}

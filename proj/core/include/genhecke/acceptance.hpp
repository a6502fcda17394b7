#ifndef GENHECKE_ACCEPTANCE_HPP
#define GENHECKE_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace genhecke {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double wall_ms = 0;
  /// canonical JSON payload (timings excluded) used by the determinism
  /// criterion
  std::string report;
};

struct AcceptanceOptions {
  std::string data_dir;
  std::uint64_t seed = 1;  // base seed for the random specializations
  /// per-criterion wall-clock budgets are part of the criteria; disabling
  /// is only for debugging on slow machines
  bool enforce_runtime = true;
  std::function<void(const std::string&)> log;
};

/// Runs the full acceptance battery (9 criteria). on_result fires as each
/// criterion finishes; the returned vector holds all of them.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts,
    const std::function<void(const CriterionResult&)>& on_result = nullptr);

}  // namespace genhecke

#endif  // GENHECKE_ACCEPTANCE_HPP

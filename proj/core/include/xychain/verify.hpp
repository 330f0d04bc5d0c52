// Randomized oracle-equivalence suites: every production closed form checked
// against an independent definition-side computation over a reproducible
// sample of physical parameter points.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xychain {

struct OracleSuiteResult {
  std::string name;
  int points = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs the five suites:
///   correlators-vs-ode   closed-form observables vs per-mode RK4 (1e-8)
///   rec-closed-vs-entropy closed-form REC vs S(diag) - S(rho) (1e-10)
///   lqc-vs-skew          closed-form components vs commutator skew info
///                        (1e-10)
///   qfi-vs-spectral      closed-form QFI vs spectral sum, fallback branch
///                        exercised (1e-8)
///   sqrt-squares-to-rho  closed-form matrix sqrt squared vs the state,
///                        degenerate off-diagonal branches included (1e-10)
/// `points` is the number of randomized (params, t) samples per suite;
/// `seed` fixes the sample. Deterministic for fixed arguments.
std::vector<OracleSuiteResult> run_oracle_suites(int points = 1000,
                                                 std::uint64_t seed = 12345);

}  // namespace xychain

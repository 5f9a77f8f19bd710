#pragma once
// Reproduction harness: ten pinned criteria covering the headline results
// at desk scale (exact rank tables, lower-bound certificates, the three
// decomposition constructions, and the submultiplicative bound reports).
// Each criterion carries its own tolerance and time budget; a failure
// reports the first offending case in `detail`.

#include <cstdint>
#include <string>
#include <vector>

namespace psrank {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values, or the first failing case
  double ms = 0.0;
};

// Runs all ten criteria; `seed` drives every randomized check.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

// True iff every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace psrank

// Runs the ten-point reproduction table and prints one PASS/FAIL line per
// criterion. Exit code 0 iff every criterion passed. The seed comes from
// PSRANK_SEED when set, else a fixed default, so the run is reproducible.

#include <cstdio>
#include <cstdlib>

#include "psrank/acceptance.hpp"

int main() {
  std::uint64_t seed = 20240613ULL;
  if (const char* s = std::getenv("PSRANK_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') seed = v;
  }
  auto results = psrank::run_acceptance(seed);
  int npass = 0;
  for (const auto& r : results) {
    npass += r.pass ? 1 : 0;
    std::printf("%s  [%2d/10] %-58s %9.1f ms  %s\n", r.pass ? "PASS" : "FAIL", r.index,
                r.name.c_str(), r.ms, r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed (seed %llu)\n", npass, results.size(),
              static_cast<unsigned long long>(seed));
  return psrank::all_passed(results) ? 0 : 1;
}

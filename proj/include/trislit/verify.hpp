#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace trislit::verify {

struct Options {
  int max_photons = 4;          // Fock cross-checks cover n = 0..max_photons
  int identity_trials = 10000;  // random triples in the Sorkin battery
  std::uint64_t seed = 12345;
  // Self-test hook: adds this offset to one analytic correlation entry before
  // comparison, to prove the check would catch a real discrepancy.
  double inject_correlation_fault = 0.0;
};

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

Report run(const Options& options);
void print(const Report& report, std::ostream& out);

}  // namespace trislit::verify

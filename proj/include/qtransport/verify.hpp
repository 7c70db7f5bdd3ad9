// verify.hpp — the end-to-end verification suite run by `qtransport verify`
// and by the acceptance test binary
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtransport::verify {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs every criterion in order with a single seeded generator.
std::vector<CriterionResult> run_all(std::uint64_t seed);

// Deterministic plain-text report (one pass/fail line per criterion).
std::string render_report(const std::vector<CriterionResult>& results,
                          std::uint64_t seed);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace qtransport::verify

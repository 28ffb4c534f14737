#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmc/homlab.hpp"
#include "cmc/matrix.hpp"

namespace cmc {

// Worked-example fixtures reproduced bit-exactly by the paper-examples
// suite: the rank-2 matrix a, its order-2 compound and signed
// complementary compound, and the two-row cofactor matrix of rows (1, 2).
struct GoldenFixtures {
  RMatrix a;
  RMatrix m2;
  RMatrix m2_tilde;
  RMatrix k12;
};

const GoldenFixtures& golden_fixtures();

struct VerifyOptions {
  std::uint64_t seed = 1;
  // Total sampling budget of a suite, spread over its (n, p) cases; 0 runs
  // only the fixed, non-sampled checks.
  std::uint64_t trials = 20;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyReport> reports;

  bool ok() const {
    for (const auto& r : reports)
      if (r.failed()) return false;
    return true;
  }
};

// Suite names accepted by run_suite, in canonical order: paper-examples,
// multiplicativity, sylvester-franke, double-compound, group-preservation,
// so4-involution, injectivity, laplace-signs.
const std::vector<std::string>& suite_names();

// Runs one named suite; RankError on an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

// Stable text rendering, one block per report: a status line plus indented
// claim and witness lines for anything that is not a plain verification.
std::string report_text(const PropertyReport& r);

// One-line JSON object per report with the same payload.
std::string report_json_line(const PropertyReport& r);

}  // namespace cmc

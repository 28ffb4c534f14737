#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cmc {

// One determinant run. scalar_ops counts exact rational additions and
// multiplications, so it is identical for identical input and strategy;
// wall_time_ns is the only nondeterministic column.
struct BenchRecord {
  std::string strategy;
  std::size_t n = 0;
  std::uint64_t trial = 0;
  std::uint64_t scalar_ops = 0;
  std::uint64_t minor_evaluations = 0;
  std::uint64_t wall_time_ns = 0;
  bool skipped = false;  // size beyond the strategy's hard cap
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  // Strategy specs: bareiss, permutation, cofactor, pair-rows, or
  // general-rows:p (expansion along the leading p rows).
  std::vector<std::string> strategies;
  std::uint64_t seed = 1;
  std::uint64_t trials = 3;
};

// Parses "2,4..6" style size lists (comma-separated values or a..b runs).
std::vector<std::size_t> parse_size_list(const std::string& text);

// Runs every (strategy, size, trial) combination on the same seeded
// integer matrices: the matrix depends only on (seed, size, trial), so all
// strategies see identical input and their results are cross-checked.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

// CSV with header strategy,n,trial,scalar_ops,minor_evals,wall_time_ns,status.
void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);

}  // namespace cmc

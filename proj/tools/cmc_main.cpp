// Command line driver for the exact compound-matrix calculus: determinant
// strategies, compound construction, cofactor-based kernels, identity
// verification suites, and the strategy cost bench.

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include "cmc/bench.hpp"
#include "cmc/compound.hpp"
#include "cmc/errors.hpp"
#include "cmc/homlab.hpp"
#include "cmc/io.hpp"
#include "cmc/kernel.hpp"
#include "cmc/laplace.hpp"
#include "cmc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

int cmd_det(const std::string& path, const std::string& strategy_spec) {
  cmc::MatrixFile file = cmc::load_matrix_file(path);
  cmc::DetStrategy strategy =
      cmc::parse_det_strategy(strategy_spec, file.matrix.order());
  std::cout << cmc::det_with(file.matrix, strategy).str() << '\n';
  return kExitOk;
}

int cmd_compound(const std::string& path, std::size_t p, bool adjugate_form,
                 bool complementary_form) {
  if (adjugate_form && complementary_form) {
    throw cmc::ParseError("choose at most one of --adjugate and --complementary");
  }
  cmc::MatrixFile file = cmc::load_matrix_file(path);
  cmc::CompoundMatrix result =
      adjugate_form      ? cmc::adjugate_compound(file.matrix, p)
      : complementary_form ? cmc::complementary_compound(file.matrix, p)
                           : cmc::compound(file.matrix, p);
  std::cout << cmc::matrix_to_text(result.body, file.format);
  return kExitOk;
}

int cmd_kernel(const std::string& path) {
  cmc::MatrixFile file = cmc::load_matrix_file(path);
  cmc::KernelResult kr = cmc::kernel_of(file.matrix);
  std::cout << "corank " << kr.corank << '\n';
  if (kr.corank > 0) {
    std::cout << "source " << kr.source_label() << '\n';
    for (const auto& v : kr.basis) {
      for (std::size_t i = 1; i <= v.rows(); ++i) {
        if (i > 1) std::cout << ',';
        std::cout << v.at(i, 1).str();
      }
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::uint64_t trials,
               bool as_json) {
  cmc::VerifyOptions options;
  options.seed = seed;
  options.trials = trials;

  std::vector<cmc::SuiteResult> results;
  if (suite == "all") {
    results = cmc::run_all_suites(options);
  } else {
    bool known = false;
    for (const std::string& name : cmc::suite_names()) known = known || name == suite;
    if (!known) throw cmc::ParseError("unknown verification suite: \"" + suite + "\"");
    results.push_back(cmc::run_suite(suite, options));
  }

  bool all_ok = true;
  for (const cmc::SuiteResult& sr : results) {
    if (!as_json) std::cout << "suite " << sr.suite << '\n';
    for (const cmc::PropertyReport& r : sr.reports) {
      std::cout << (as_json ? cmc::report_json_line(r) + "\n" : cmc::report_text(r));
    }
    all_ok = all_ok && sr.ok();
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_bench(const std::string& sizes, const std::string& strategies, std::uint64_t seed,
              std::uint64_t trials) {
  cmc::BenchOptions options;
  options.sizes = cmc::parse_size_list(sizes);
  options.seed = seed;
  options.trials = trials;
  std::size_t pos = 0;
  while (pos <= strategies.size()) {
    std::size_t comma = strategies.find(',', pos);
    // general-rows carries an argument after a colon, so strategies are
    // separated by commas only at the top level.
    std::string piece = comma == std::string::npos ? strategies.substr(pos)
                                                   : strategies.substr(pos, comma - pos);
    if (piece.empty()) throw cmc::ParseError("empty strategy in list");
    options.strategies.push_back(piece);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  cmc::write_bench_csv(std::cout, cmc::run_bench(options));
  return kExitOk;
}

int cmd_preimage_diag(const std::vector<std::string>& entries) {
  std::array<cmc::Rational, 6> mu;
  for (std::size_t i = 0; i < 6; ++i) mu[i] = cmc::Rational::parse(entries[i]);
  cmc::DiagonalPreimage result = cmc::diagonal_preimage(mu);
  switch (result.outcome) {
    case cmc::DiagonalPreimage::Outcome::Reconstructed:
      std::cout << "outcome: reconstructed\n";
      break;
    case cmc::DiagonalPreimage::Outcome::ConditionFailed:
      std::cout << "outcome: condition-failed\n";
      break;
    case cmc::DiagonalPreimage::Outcome::RealOnly:
      std::cout << "outcome: real-only\n";
      break;
    case cmc::DiagonalPreimage::Outcome::ComplexOnly:
      std::cout << "outcome: complex-only\n";
      break;
  }
  std::cout << result.detail << '\n';
  if (result.matrix) {
    std::cout << "matrix:\n" << cmc::matrix_to_csv(*result.matrix);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact compound-matrix calculus"};
  app.require_subcommand(1);

  std::string det_file;
  std::string det_strategy = "bareiss";
  CLI::App* det = app.add_subcommand("det", "determinant of a matrix file");
  det->add_option("file", det_file, "matrix file (.json or .csv)")->required();
  det->add_option("--strategy", det_strategy,
                  "bareiss | permutation | cofactor[:i] | pair-rows[:i,j] | "
                  "general-rows:i,j,...");

  std::string comp_file;
  std::size_t comp_p = 1;
  bool comp_adjugate = false;
  bool comp_complementary = false;
  CLI::App* comp = app.add_subcommand("compound", "p-th compound of a matrix file");
  comp->add_option("file", comp_file, "matrix file (.json or .csv)")->required();
  comp->add_option("-p", comp_p, "minor order")->required();
  comp->add_flag("--adjugate", comp_adjugate, "signed complementary compound");
  comp->add_flag("--complementary", comp_complementary, "unsigned complementary compound");

  std::string kern_file;
  CLI::App* kern = app.add_subcommand("kernel", "nullspace via cofactor constructions");
  kern->add_option("file", kern_file, "matrix file (.json or .csv)")->required();

  std::string verify_suite = "all";
  std::uint64_t verify_seed = 1;
  std::uint64_t verify_trials = 20;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
  verify->add_option("--suite", verify_suite, "suite name or 'all'");
  verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--trials", verify_trials, "sampling budget per suite");
  verify->add_flag("--json", verify_json, "one JSON object per report");

  std::string bench_sizes = "2..6";
  std::string bench_strategies = "bareiss,permutation,cofactor,pair-rows";
  std::uint64_t bench_seed = 1;
  std::uint64_t bench_trials = 3;
  CLI::App* bench = app.add_subcommand("bench", "exact-op cost of determinant strategies");
  bench->add_option("--sizes", bench_sizes, "orders, e.g. 2,4..6");
  bench->add_option("--strategies", bench_strategies, "comma-separated strategy list");
  bench->add_option("--seed", bench_seed, "matrix seed");
  bench->add_option("--trials", bench_trials, "matrices per (strategy, size)");

  std::vector<std::string> preimage_entries;
  CLI::App* preimage =
      app.add_subcommand("preimage-diag", "diagonal matrix with a given order-2 compound");
  preimage
      ->add_option("mu", preimage_entries, "six diagonal entries of the order-2 compound")
      ->expected(6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (det->parsed()) return cmd_det(det_file, det_strategy);
    if (comp->parsed()) return cmd_compound(comp_file, comp_p, comp_adjugate, comp_complementary);
    if (kern->parsed()) return cmd_kernel(kern_file);
    if (verify->parsed()) return cmd_verify(verify_suite, verify_seed, verify_trials, verify_json);
    if (bench->parsed()) return cmd_bench(bench_sizes, bench_strategies, bench_seed, bench_trials);
    if (preimage->parsed()) return cmd_preimage_diag(preimage_entries);
  } catch (const cmc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const cmc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

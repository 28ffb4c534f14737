#include "cmc/bench.hpp"

#include <charconv>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "cmc/errors.hpp"
#include "cmc/laplace.hpp"
#include "cmc/opcount.hpp"
#include "cmc/oracles.hpp"
#include "cmc/samplers.hpp"

namespace cmc {

namespace {

constexpr std::size_t kPermutationLimit = 8;
constexpr std::size_t kCofactorLimit = 10;

std::size_t parse_size(std::string_view piece) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
  if (ec != std::errc{} || ptr != piece.data() + piece.size() || v == 0) {
    throw ParseError("malformed size: \"" + std::string(piece) + "\"");
  }
  return v;
}

DetStrategy bind_strategy(const std::string& spec, std::size_t n) {
  if (spec.rfind("general-rows:", 0) == 0) {
    std::size_t p = parse_size(std::string_view(spec).substr(13));
    if (p > n) throw RankError("general-rows order exceeds the matrix order");
    std::vector<unsigned> lead;
    for (unsigned i = 1; i <= p; ++i) lead.push_back(i);
    return GeneralRows{Combo(static_cast<unsigned>(n), std::move(lead))};
  }
  return parse_det_strategy(spec, n);
}

bool over_limit(const std::string& spec, std::size_t n) {
  if (spec == "permutation") return n > kPermutationLimit;
  if (spec == "cofactor" || spec.rfind("cofactor:", 0) == 0) return n > kCofactorLimit;
  return false;
}

void validate_spec(const std::string& spec) {
  // Bind against a large dummy order so index arguments stay in range;
  // the real binding happens per size.
  bind_strategy(spec, 64);
}

}  // namespace

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = comma == std::string::npos
                                 ? std::string_view(text).substr(pos)
                                 : std::string_view(text).substr(pos, comma - pos);
    if (std::size_t dots = piece.find(".."); dots != std::string_view::npos) {
      std::size_t lo = parse_size(piece.substr(0, dots));
      std::size_t hi = parse_size(piece.substr(dots + 2));
      if (lo > hi) throw ParseError("descending size range");
      for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_size(piece));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("empty size list");
  return out;
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  if (options.sizes.empty()) throw ParseError("bench needs at least one size");
  if (options.strategies.empty()) throw ParseError("bench needs at least one strategy");
  for (const auto& spec : options.strategies) validate_spec(spec);

  std::vector<BenchRecord> records;
  for (const std::string& spec : options.strategies) {
    for (std::size_t n : options.sizes) {
      for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
        BenchRecord rec;
        rec.strategy = spec;
        rec.n = n;
        rec.trial = trial;
        if (over_limit(spec, n)) {
          rec.skipped = true;
          records.push_back(std::move(rec));
          continue;
        }
        // The matrix depends only on (seed, n, trial) so every strategy
        // sees the same input.
        Sampler sampler(options.seed + 1000003 * n + trial);
        RMatrix a = sampler.integer_matrix(n, n, 9);
        DetStrategy strategy = bind_strategy(spec, n);

        opcount::reset();
        auto t0 = std::chrono::steady_clock::now();
        Rational det = det_with(a, strategy);
        auto t1 = std::chrono::steady_clock::now();
        const opcount::Counters& c = opcount::counters();
        rec.scalar_ops = c.scalar_ops();
        rec.minor_evaluations = c.minor_evaluations;
        rec.wall_time_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());

        // All strategies agree exactly; a mismatch is a library bug, not
        // an input problem.
        if (det != det_bareiss(a)) {
          throw std::logic_error("strategy disagreement during bench on " + spec);
        }
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "strategy,n,trial,scalar_ops,minor_evals,wall_time_ns,status\n";
  for (const BenchRecord& r : records) {
    os << r.strategy << ',' << r.n << ',' << r.trial << ',';
    if (r.skipped) {
      os << ",,," << "skipped" << '\n';
    } else {
      os << r.scalar_ops << ',' << r.minor_evaluations << ',' << r.wall_time_ns << ",ok\n";
    }
  }
}

}  // namespace cmc

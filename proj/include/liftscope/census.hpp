#pragma once

// Counting integer inputs n, |n| <= B, with a rational lift y, g(y) = f(n),
// that differs from every h(n), h in the decomposition set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftscope/pipeline.hpp"
#include "liftscope/simd.hpp"

namespace liftscope {

struct CensusOptions {
  /// 0: LIFTSCOPE_THREADS if set, else the hardware concurrency.
  unsigned threads = 0;
  /// Keep the list of counted inputs.
  bool keep_inputs = false;
  /// Null: best supported kernels.
  const simd::SieveKernels* kernels = nullptr;
  /// Sieve primes per factor.
  int max_primes = 24;
};

struct FitResult {
  double slope = 0;
  double intercept = 0;
  /// Root-mean-square residual in log space.
  double residual = 0;
  int points = 0;
};

struct CensusSeries {
  std::vector<std::int64_t> checkpoints;
  std::vector<std::uint64_t> counts;
  /// Counted inputs with |n| <= max checkpoint, ascending (keep_inputs only).
  std::vector<std::int64_t> inputs;
  std::optional<FitResult> fit;
};

/// Counts at each checkpoint (strictly increasing, positive).
CensusSeries census_curve(const UniPoly& f, const UniPoly& g, const std::vector<std::int64_t>& checkpoints,
                          const CensusOptions& options = {});

/// Single count; h must equal decompositions(f, g).
std::uint64_t new_lift_count(const UniPoly& f, const UniPoly& g, const std::vector<UniPoly>& h, std::int64_t bound,
                             const CensusOptions& options = {});

/// Least-squares slope of log(count) against log(B) over checkpoints with
/// count >= min_count. Throws InputError with fewer than three such points.
FitResult fit_exponent(const CensusSeries& series, std::uint64_t min_count = 5);

struct FitVerdict {
  bool consistent = false;
  std::string text;
};

struct VerdictOptions {
  double tolerance = 0.08;
  /// Slopes below this count as logarithmic growth.
  double polylog_threshold = 0.15;
};

/// Compares a census against the growth class predicted by the pipeline.
FitVerdict compare_with_prediction(const CensusSeries& series, const LiftReport& report,
                                   const VerdictOptions& options = {});

/// Threads used when options.threads is 0.
unsigned default_census_threads();

}  // namespace liftscope

#pragma once

#include <cstdint>

#include "leo/core.hpp"
#include "leo/metrics.hpp"

namespace leo {

/// Outcome of one optimization run, shared by every algorithm in the suite.
struct RunResult {
  Candidate best;
  /// Best-so-far objective per iteration, entry 0 = initial population.
  /// Monotone under the problem's sense.
  std::vector<double> best_curve;
  /// Population mean objective per iteration, entry 0 included.
  std::vector<double> mean_curve;
  metrics::TraceSet traces;
  double wall_ms = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  int bound_repairs = 0;
};

}  // namespace leo

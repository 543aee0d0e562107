#pragma once

#include "leo/core.hpp"
#include "leo/run.hpp"

namespace leo {

/// Canonical generational GA used as a comparison baseline: tournament
/// selection, uniform crossover, per-gene Gaussian perturbation, elitism of 1.
struct GaConfig {
  int population_size = 100;
  int iterations = 500;
  double crossover_rate = 0.9;
  /// Per-gene mutation probability (1/d for the 10-dimensional battery).
  double mutation_rate = 0.1;
  int tournament_size = 3;
  /// Perturbation scale as a fraction of each gene's bound range. The
  /// default (full range) keeps the baseline at the crude published-GA
  /// strength the comparison tables are calibrated against.
  double mutation_sigma_fraction = 1.0;
  bool trace_positions = false;

  void validate() const;
};

/// Global-best PSO with linearly decaying inertia and velocity clamping.
struct PsoConfig {
  int population_size = 100;
  int iterations = 500;
  double inertia_start = 0.9;
  double inertia_end = 0.4;
  double cognitive = 2.0;
  double social = 2.0;
  double velocity_clamp_fraction = 0.2;
  bool trace_positions = false;

  void validate() const;
};

RunResult ga_run(const Problem& problem, const GaConfig& config, std::uint64_t seed);
RunResult pso_run(const Problem& problem, const PsoConfig& config, std::uint64_t seed);

}  // namespace leo

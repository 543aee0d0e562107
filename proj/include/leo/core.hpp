#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leo/random.hpp"

namespace leo {

enum class Sense { minimize, maximize };

/// One search agent: gene vector plus cached objective value.
struct Candidate {
  std::vector<double> genes;
  double value = 0.0;
  bool evaluated = false;
};

/// Objective callback. The stream pointer is only consumed by noisy
/// objectives (TF7); pass nullptr to force the noise term to zero.
/// Evaluators must be pure and safe to call from concurrent tasks.
using Objective = std::function<double(std::span<const double>, RandomStream*)>;

struct Problem {
  std::string id;
  int dimension = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  Sense sense = Sense::minimize;
  std::optional<std::vector<double>> shift;
  std::optional<double> known_optimum;
  Objective objective;

  /// Throws std::invalid_argument on malformed bounds or shape mismatch.
  /// Degenerate intervals (lower == upper) are allowed; inverted ones are not.
  void validate() const;

  double evaluate(std::span<const double> x, RandomStream* rng = nullptr) const;
};

struct RunConfig {
  int population_size = 100;
  int iterations = 500;
  int repetitions = 30;
  double crossover_rate = 0.6;
  double mutation_rate = 0.3;
  double alpha_low = 0.2;
  double alpha_high = 0.3;
  double sigma_low = -1.0;
  double sigma_high = 1.0;
  double epsilon_div = 1e-12;
  std::uint64_t seed = 0;
  /// Records per-iteration agent positions (search history + trajectory)
  /// in addition to the always-on convergence and mean-fitness curves.
  bool trace_positions = false;

  /// Throws std::invalid_argument when any invariant is broken. The
  /// population size must be even: the algorithm's half/half partition
  /// requires an exact N/2 split.
  void validate() const;
};

/// True iff a is strictly preferable to b under the given sense.
/// Throws std::invalid_argument on non-finite input.
bool better(double a, double b, Sense sense);

/// Worst representable finite value under the sense; used to stand in for
/// non-finite objective results so stochastic runs stay alive.
double worst_value(Sense sense);

/// Saturates each gene into [lower, upper]. Non-finite genes are replaced by
/// the nearest bound (sign-based; NaN falls to the lower bound) and counted
/// through `repairs` when provided. Total function: never throws.
std::vector<double> clamp_to_bounds(std::vector<double> genes, const Problem& problem,
                                    int* repairs = nullptr);
void clamp_in_place(std::span<double> genes, const Problem& problem, int* repairs = nullptr);

/// n candidates with genes uniform over the problem box, all unevaluated.
std::vector<Candidate> initialize_population(const Problem& problem, int n, RandomStream& rng);

}  // namespace leo

#pragma once

#include <vector>

#include "leo/core.hpp"
#include "leo/operators.hpp"
#include "leo/run.hpp"

namespace leo {

/// Group partition of one generation. hg holds the best N/2 candidate
/// indices; fg_pool and sg_pool are disjoint and cover hg exactly;
/// the champion fields point at the best member of each final pool
/// (-1 when a pool is empty).
struct GroupPartition {
  std::vector<int> sorted;  ///< all indices, best-first, ties by lower index
  std::vector<int> hg;
  std::vector<int> fg_pool;
  std::vector<int> sg_pool;
  int fg_champion = -1;
  int sg_champion = -1;
};

/// Group-assignment score: candidate value over the guarded champion value
/// (the same sign-preserving epsilon floor as the crossover gene update).
double relative_fitness(double candidate_value, double champion_value, double epsilon_div);

/// Sorts the population best-first, takes the top half, shuffles it into two
/// provisional groups, and reassigns each member against the two provisional
/// champions: not better than the second group's champion -> sg_pool, else
/// not better than the first group's champion -> fg_pool, else it stays in
/// its provisional group. Champions are then recomputed on the final pools.
GroupPartition partition_groups(const std::vector<Candidate>& population, Sense sense,
                                RandomStream& rng);

/// Draws `count` parent indices: uniformly without replacement from fg_pool
/// first, then sg_pool, then the remaining sorted population best-first.
std::vector<int> select_parents(const GroupPartition& partition, int count, RandomStream& rng);

/// How the crossover treats the updated genes Y against the parent X.
enum class CrossoverAcceptance {
  /// Y replaces the parent unconditionally.
  replace,
  /// The better of (Y, parent) under the problem sense moves on to mutation.
  keep_better,
};

/// Variant knobs for readings the source pseudocode leaves open. The default
/// is the configuration the acceptance suite runs under.
struct LeoVariant {
  CrossoverAcceptance acceptance = CrossoverAcceptance::keep_better;
  /// Run the Gaussian mutation stage over the whole population each
  /// generation (one mutant copy per incumbent) in addition to mutating
  /// crossover offspring.
  bool population_mutation_stage = true;
};

/// The strictest reading of the pseudocode: offspring replace their parents
/// unconditionally and only offspring are mutated.
inline constexpr LeoVariant kLiteralVariant{CrossoverAcceptance::replace, false};

struct LeoState {
  Problem problem;
  RunConfig config;
  LeoVariant variant;
  RandomStream rng;
  std::vector<Candidate> population;  ///< size N, evaluated, best-first
  Candidate best_so_far;
  int generation = 0;
  std::uint64_t evaluations = 0;
  int bound_repairs = 0;

  LeoState(Problem p, RunConfig c, LeoVariant v);

  /// Evaluates and ranks the initial population.
  void initialize();

  /// Advances one generation: partition, parent selection, LPX crossover,
  /// Gaussian mutation of the offspring, elitist truncation of
  /// population + offspring back to N.
  void step();

  double mean_value() const;
};

/// Full Leo run under the given config; the RunConfig seed drives the stream.
RunResult leo_run(const Problem& problem, const RunConfig& config, LeoVariant variant = {});

}  // namespace leo

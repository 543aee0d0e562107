#include "leo/algorithm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace leo {

namespace {

double sanitized(double value, Sense sense) {
  return std::isfinite(value) ? value : worst_value(sense);
}

/// Index of the best entry (per sense) among `pool`, ties to the lower index.
int champion_of(const std::vector<int>& pool, const std::vector<Candidate>& population,
                Sense sense) {
  int champ = -1;
  for (int idx : pool) {
    if (champ < 0) {
      champ = idx;
    } else if (better(population[idx].value, population[champ].value, sense)) {
      champ = idx;
    } else if (!better(population[champ].value, population[idx].value, sense) && idx < champ) {
      champ = idx;  // tie, keep the lower index
    }
  }
  return champ;
}

}  // namespace

double relative_fitness(double candidate_value, double champion_value, double epsilon_div) {
  return candidate_value / guard_denominator(champion_value, epsilon_div);
}

GroupPartition partition_groups(const std::vector<Candidate>& population, Sense sense,
                                RandomStream& rng) {
  const int n = static_cast<int>(population.size());
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("partition_groups: population size must be even and >= 2");
  for (const auto& c : population)
    if (!c.evaluated) throw std::invalid_argument("partition_groups: unevaluated candidate");

  GroupPartition part;
  part.sorted.resize(static_cast<std::size_t>(n));
  std::iota(part.sorted.begin(), part.sorted.end(), 0);
  std::stable_sort(part.sorted.begin(), part.sorted.end(), [&](int a, int b) {
    return better(population[a].value, population[b].value, sense);
  });

  const int half = n / 2;
  part.hg.assign(part.sorted.begin(), part.sorted.begin() + half);

  std::vector<int> shuffled = part.hg;
  rng.shuffle(shuffled);
  std::vector<int> fg_prov(shuffled.begin(), shuffled.begin() + half / 2);
  std::vector<int> sg_prov(shuffled.begin() + half / 2, shuffled.end());

  int fg_champ = champion_of(fg_prov, population, sense);
  int sg_champ = champion_of(sg_prov, population, sense);

  auto in_fg_prov = [&](int idx) {
    return std::find(fg_prov.begin(), fg_prov.end(), idx) != fg_prov.end();
  };

  for (int idx : part.hg) {
    double v = population[idx].value;
    if (sg_champ >= 0 && !better(v, population[sg_champ].value, sense)) {
      part.sg_pool.push_back(idx);
    } else if (fg_champ >= 0 && !better(v, population[fg_champ].value, sense)) {
      part.fg_pool.push_back(idx);
    } else {
      // Better than both champions: stays in its provisional group.
      (in_fg_prov(idx) ? part.fg_pool : part.sg_pool).push_back(idx);
    }
  }

  part.fg_champion = champion_of(part.fg_pool, population, sense);
  part.sg_champion = champion_of(part.sg_pool, population, sense);
  return part;
}

std::vector<int> select_parents(const GroupPartition& partition, int count, RandomStream& rng) {
  const int n = static_cast<int>(partition.sorted.size());
  if (count < 2 || count % 2 != 0)
    throw std::invalid_argument("select_parents: count must be even and >= 2");
  if (count > n) throw std::invalid_argument("select_parents: count exceeds population size");

  std::vector<int> parents;
  parents.reserve(static_cast<std::size_t>(count));
  std::vector<char> taken(static_cast<std::size_t>(n), 0);

  auto draw_from = [&](const std::vector<int>& pool) {
    std::vector<int> order = pool;
    rng.shuffle(order);
    for (int idx : order) {
      if (static_cast<int>(parents.size()) == count) return;
      parents.push_back(idx);
      taken[static_cast<std::size_t>(idx)] = 1;
    }
  };

  draw_from(partition.fg_pool);
  if (static_cast<int>(parents.size()) < count) draw_from(partition.sg_pool);
  for (int idx : partition.sorted) {
    if (static_cast<int>(parents.size()) == count) break;
    if (!taken[static_cast<std::size_t>(idx)]) {
      parents.push_back(idx);
      taken[static_cast<std::size_t>(idx)] = 1;
    }
  }
  return parents;
}

LeoState::LeoState(Problem p, RunConfig c, LeoVariant v)
    : problem(std::move(p)), config(c), variant(v), rng(c.seed) {
  config.validate();
  problem.validate();
}

void LeoState::initialize() {
  population = initialize_population(problem, config.population_size, rng);
  for (auto& candidate : population) {
    candidate.value = sanitized(problem.evaluate(candidate.genes, &rng), problem.sense);
    candidate.evaluated = true;
    ++evaluations;
  }
  std::stable_sort(population.begin(), population.end(), [&](const auto& a, const auto& b) {
    return better(a.value, b.value, problem.sense);
  });
  best_so_far = population.front();
  generation = 0;
}

void LeoState::step() {
  const int n = config.population_size;
  const int pairs = static_cast<int>(std::llround(config.crossover_rate * n / 2.0));

  std::vector<Candidate> offspring;
  auto evaluate = [&](Candidate& c) {
    c.value = sanitized(problem.evaluate(c.genes, &rng), problem.sense);
    c.evaluated = true;
    ++evaluations;
  };

  if (pairs > 0) {
    GroupPartition partition = partition_groups(population, problem.sense, rng);
    std::vector<int> parents = select_parents(partition, 2 * pairs, rng);
    offspring.reserve(static_cast<std::size_t>(2 * pairs));

    for (int p = 0; p < pairs; ++p) {
      const Candidate& x1 = population[static_cast<std::size_t>(parents[2 * p])];
      const Candidate& x2 = population[static_cast<std::size_t>(parents[2 * p + 1])];
      double alpha = rng.uniform(config.alpha_low, config.alpha_high);
      auto [o1, o2] = lpx_offspring_pair(x1.genes, x2.genes, alpha);
      auto [y1, y2] = lpx_gene_update(o1, o2, x1.genes, x2.genes, config.epsilon_div);
      clamp_in_place(y1, problem, &bound_repairs);
      clamp_in_place(y2, problem, &bound_repairs);

      auto make_child = [&](std::vector<double>&& updated, const Candidate& parent) {
        Candidate base;
        base.genes = std::move(updated);
        if (variant.acceptance == CrossoverAcceptance::keep_better) {
          evaluate(base);
          if (!better(base.value, parent.value, problem.sense)) base = parent;
        }
        double sigma = rng.uniform(config.sigma_low, config.sigma_high);
        Candidate child;
        child.genes = gaussian_mutate(base.genes, {sigma, config.mutation_rate}, rng);
        clamp_in_place(child.genes, problem, &bound_repairs);
        evaluate(child);
        offspring.push_back(std::move(child));
      };

      make_child(std::move(y1), x1);
      make_child(std::move(y2), x2);
    }
  }

  if (variant.population_mutation_stage) {
    for (int i = 0; i < n; ++i) {
      double sigma = rng.uniform(config.sigma_low, config.sigma_high);
      Candidate mutant;
      mutant.genes =
          gaussian_mutate(population[static_cast<std::size_t>(i)].genes,
                          {sigma, config.mutation_rate}, rng);
      clamp_in_place(mutant.genes, problem, &bound_repairs);
      evaluate(mutant);
      offspring.push_back(std::move(mutant));
    }
  }

  if (!offspring.empty()) {
    population.insert(population.end(), std::make_move_iterator(offspring.begin()),
                      std::make_move_iterator(offspring.end()));
    std::stable_sort(population.begin(), population.end(), [&](const auto& a, const auto& b) {
      return better(a.value, b.value, problem.sense);
    });
    population.resize(static_cast<std::size_t>(n));
  }

  if (better(population.front().value, best_so_far.value, problem.sense))
    best_so_far = population.front();
  ++generation;
}

double LeoState::mean_value() const {
  double sum = 0.0;
  for (const auto& c : population) sum += c.value;
  return sum / static_cast<double>(population.size());
}

RunResult leo_run(const Problem& problem, const RunConfig& config, LeoVariant variant) {
  auto start = std::chrono::steady_clock::now();
  LeoState state(problem, config, variant);
  state.initialize();

  RunResult result;
  result.seed = config.seed;
  result.traces.positions_enabled = config.trace_positions;
  result.best_curve.reserve(static_cast<std::size_t>(config.iterations) + 1);
  result.mean_curve.reserve(static_cast<std::size_t>(config.iterations) + 1);

  auto record = [&](int iteration) {
    double mean = state.mean_value();
    result.best_curve.push_back(state.best_so_far.value);
    result.mean_curve.push_back(mean);
    result.traces.record(iteration, state.population, mean, state.best_so_far.value);
  };

  record(0);
  for (int t = 1; t <= config.iterations; ++t) {
    state.step();
    record(t);
  }

  result.best = state.best_so_far;
  result.evaluations = state.evaluations;
  result.bound_repairs = state.bound_repairs;
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace leo

#include "leo/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace leo {

namespace {

double sanitized(double value, Sense sense) {
  return std::isfinite(value) ? value : worst_value(sense);
}

double population_mean(const std::vector<Candidate>& population) {
  double sum = 0.0;
  for (const auto& c : population) sum += c.value;
  return sum / static_cast<double>(population.size());
}

int best_index(const std::vector<Candidate>& population, Sense sense) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(population.size()); ++i)
    if (better(population[i].value, population[best].value, sense)) best = i;
  return best;
}

}  // namespace

void GaConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("GA population_size must be >= 2");
  if (iterations < 0) throw std::invalid_argument("GA iterations must be non-negative");
  if (crossover_rate < 0.0 || crossover_rate > 1.0)
    throw std::invalid_argument("GA crossover_rate must lie in [0,1]");
  if (mutation_rate < 0.0 || mutation_rate > 1.0)
    throw std::invalid_argument("GA mutation_rate must lie in [0,1]");
  if (tournament_size < 2) throw std::invalid_argument("GA tournament_size must be >= 2");
}

void PsoConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("PSO population_size must be >= 2");
  if (iterations < 0) throw std::invalid_argument("PSO iterations must be non-negative");
  if (!(inertia_start >= inertia_end) || inertia_end < 0.0)
    throw std::invalid_argument("PSO requires inertia_start >= inertia_end >= 0");
  if (velocity_clamp_fraction <= 0.0 || velocity_clamp_fraction > 1.0)
    throw std::invalid_argument("PSO velocity_clamp_fraction must lie in (0,1]");
}

RunResult ga_run(const Problem& problem, const GaConfig& config, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  config.validate();
  problem.validate();
  RandomStream rng(seed);

  RunResult result;
  result.seed = seed;
  result.traces.positions_enabled = config.trace_positions;

  const int n = config.population_size;
  const int d = problem.dimension;
  std::vector<Candidate> population = initialize_population(problem, n, rng);
  for (auto& c : population) {
    c.value = sanitized(problem.evaluate(c.genes, &rng), problem.sense);
    c.evaluated = true;
    ++result.evaluations;
  }

  Candidate best = population[static_cast<std::size_t>(best_index(population, problem.sense))];

  auto record = [&](int iteration) {
    double mean = population_mean(population);
    result.best_curve.push_back(best.value);
    result.mean_curve.push_back(mean);
    result.traces.record(iteration, population, mean, best.value);
  };
  record(0);

  auto tournament = [&]() -> const Candidate& {
    int winner = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n)));
    for (int t = 1; t < config.tournament_size; ++t) {
      int challenger = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n)));
      if (better(population[challenger].value, population[winner].value, problem.sense))
        winner = challenger;
    }
    return population[static_cast<std::size_t>(winner)];
  };

  for (int iter = 1; iter <= config.iterations; ++iter) {
    std::vector<Candidate> next;
    next.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(next.size()) < n) {
      const Candidate& p1 = tournament();
      const Candidate& p2 = tournament();
      Candidate c1{p1.genes}, c2{p2.genes};
      if (rng.bernoulli(config.crossover_rate)) {
        for (int g = 0; g < d; ++g)
          if (rng.bernoulli(0.5)) std::swap(c1.genes[g], c2.genes[g]);
      }
      for (Candidate* child : {&c1, &c2}) {
        if (static_cast<int>(next.size()) == n) break;
        for (int g = 0; g < d; ++g) {
          if (rng.bernoulli(config.mutation_rate)) {
            double scale = config.mutation_sigma_fraction * (problem.upper[g] - problem.lower[g]);
            child->genes[g] += scale * rng.normal();
          }
        }
        clamp_in_place(child->genes, problem, &result.bound_repairs);
        child->value = sanitized(problem.evaluate(child->genes, &rng), problem.sense);
        child->evaluated = true;
        ++result.evaluations;
        next.push_back(std::move(*child));
      }
    }
    // Elitism of 1: the incumbent best replaces the worst child.
    int worst = 0;
    for (int i = 1; i < n; ++i)
      if (better(next[worst].value, next[i].value, problem.sense)) worst = i;
    if (better(best.value, next[worst].value, problem.sense)) next[worst] = best;

    population = std::move(next);
    int gen_best = best_index(population, problem.sense);
    if (better(population[gen_best].value, best.value, problem.sense))
      best = population[gen_best];
    record(iter);
  }

  result.best = best;
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

RunResult pso_run(const Problem& problem, const PsoConfig& config, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  config.validate();
  problem.validate();
  RandomStream rng(seed);

  RunResult result;
  result.seed = seed;
  result.traces.positions_enabled = config.trace_positions;

  const int n = config.population_size;
  const int d = problem.dimension;
  std::vector<Candidate> particles = initialize_population(problem, n, rng);
  std::vector<std::vector<double>> velocity(static_cast<std::size_t>(n),
                                            std::vector<double>(static_cast<std::size_t>(d), 0.0));
  std::vector<double> vmax(static_cast<std::size_t>(d));
  for (int g = 0; g < d; ++g)
    vmax[g] = config.velocity_clamp_fraction * (problem.upper[g] - problem.lower[g]);

  for (auto& p : particles) {
    p.value = sanitized(problem.evaluate(p.genes, &rng), problem.sense);
    p.evaluated = true;
    ++result.evaluations;
  }
  std::vector<Candidate> pbest = particles;
  Candidate gbest = particles[static_cast<std::size_t>(best_index(particles, problem.sense))];

  auto record = [&](int iteration) {
    double mean = population_mean(particles);
    result.best_curve.push_back(gbest.value);
    result.mean_curve.push_back(mean);
    result.traces.record(iteration, particles, mean, gbest.value);
  };
  record(0);

  for (int iter = 1; iter <= config.iterations; ++iter) {
    double t = config.iterations > 1 ? static_cast<double>(iter - 1) / (config.iterations - 1) : 0.0;
    double w = config.inertia_start + (config.inertia_end - config.inertia_start) * t;
    for (int i = 0; i < n; ++i) {
      auto& x = particles[static_cast<std::size_t>(i)];
      auto& v = velocity[static_cast<std::size_t>(i)];
      for (int g = 0; g < d; ++g) {
        double r1 = rng.unit();
        double r2 = rng.unit();
        v[g] = w * v[g] + config.cognitive * r1 * (pbest[i].genes[g] - x.genes[g]) +
               config.social * r2 * (gbest.genes[g] - x.genes[g]);
        v[g] = std::clamp(v[g], -vmax[g], vmax[g]);
        x.genes[g] += v[g];
        if (x.genes[g] < problem.lower[g]) {
          x.genes[g] = problem.lower[g];
          v[g] = 0.0;
        } else if (x.genes[g] > problem.upper[g]) {
          x.genes[g] = problem.upper[g];
          v[g] = 0.0;
        }
      }
      x.value = sanitized(problem.evaluate(x.genes, &rng), problem.sense);
      ++result.evaluations;
    }
    for (int i = 0; i < n; ++i) {
      if (better(particles[i].value, pbest[i].value, problem.sense)) pbest[i] = particles[i];
      if (better(pbest[i].value, gbest.value, problem.sense)) gbest = pbest[i];
    }
    record(iter);
  }

  result.best = gbest;
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace leo

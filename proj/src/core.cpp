#include "leo/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace leo {

void Problem::validate() const {
  if (dimension <= 0) throw std::invalid_argument(id + ": dimension must be positive");
  if (lower.size() != static_cast<std::size_t>(dimension) ||
      upper.size() != static_cast<std::size_t>(dimension))
    throw std::invalid_argument(id + ": bounds length must equal dimension");
  for (int i = 0; i < dimension; ++i) {
    if (!(lower[i] <= upper[i]))
      throw std::invalid_argument(id + ": lower bound exceeds upper bound");
  }
  if (shift && shift->size() != static_cast<std::size_t>(dimension))
    throw std::invalid_argument(id + ": shift length must equal dimension");
  if (!objective) throw std::invalid_argument(id + ": missing objective");
}

double Problem::evaluate(std::span<const double> x, RandomStream* rng) const {
  if (x.size() != static_cast<std::size_t>(dimension))
    throw std::invalid_argument(id + ": evaluation with wrong dimension");
  return objective(x, rng);
}

void RunConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("population_size must be >= 2");
  if (population_size % 2 != 0)
    throw std::invalid_argument("population_size must be even (required by the N/2 split)");
  if (iterations < 0) throw std::invalid_argument("iterations must be non-negative");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
  if (crossover_rate < 0.0 || crossover_rate > 1.0)
    throw std::invalid_argument("crossover_rate must lie in [0,1]");
  if (mutation_rate < 0.0 || mutation_rate > 1.0)
    throw std::invalid_argument("mutation_rate must lie in [0,1]");
  if (!(alpha_low < alpha_high)) throw std::invalid_argument("alpha_low must be < alpha_high");
  if (!(sigma_low < sigma_high)) throw std::invalid_argument("sigma_low must be < sigma_high");
  if (!(epsilon_div > 0.0)) throw std::invalid_argument("epsilon_div must be positive");
}

bool better(double a, double b, Sense sense) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("better() requires finite values");
  return sense == Sense::minimize ? a < b : a > b;
}

double worst_value(Sense sense) {
  return sense == Sense::minimize ? std::numeric_limits<double>::max()
                                  : std::numeric_limits<double>::lowest();
}

void clamp_in_place(std::span<double> genes, const Problem& problem, int* repairs) {
  for (std::size_t i = 0; i < genes.size(); ++i) {
    double g = genes[i];
    if (!std::isfinite(g)) {
      genes[i] = (std::isnan(g) || std::signbit(g)) ? problem.lower[i] : problem.upper[i];
      if (repairs) ++*repairs;
      continue;
    }
    if (g < problem.lower[i])
      genes[i] = problem.lower[i];
    else if (g > problem.upper[i])
      genes[i] = problem.upper[i];
  }
}

std::vector<double> clamp_to_bounds(std::vector<double> genes, const Problem& problem,
                                    int* repairs) {
  if (genes.size() != static_cast<std::size_t>(problem.dimension))
    throw std::invalid_argument(problem.id + ": clamp with wrong dimension");
  clamp_in_place(genes, problem, repairs);
  return genes;
}

std::vector<Candidate> initialize_population(const Problem& problem, int n, RandomStream& rng) {
  problem.validate();
  if (n < 2) throw std::invalid_argument("population initialization requires n >= 2");
  std::vector<Candidate> population(static_cast<std::size_t>(n));
  for (auto& candidate : population) {
    candidate.genes.resize(static_cast<std::size_t>(problem.dimension));
    for (int i = 0; i < problem.dimension; ++i)
      candidate.genes[static_cast<std::size_t>(i)] = rng.uniform(problem.lower[i], problem.upper[i]);
  }
  return population;
}

}  // namespace leo

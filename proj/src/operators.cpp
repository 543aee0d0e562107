#include "leo/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace leo {

double guard_denominator(double v, double epsilon_div) {
  if (std::abs(v) >= epsilon_div) return v;
  return std::signbit(v) ? -epsilon_div : epsilon_div;
}

std::pair<std::vector<double>, std::vector<double>> lpx_offspring_pair(
    std::span<const double> x1, std::span<const double> x2, double alpha) {
  if (x1.size() != x2.size() || x1.empty())
    throw std::invalid_argument("lpx_offspring_pair: parents must share a positive length");
  std::vector<double> o1(x1.size()), o2(x1.size());
  for (std::size_t g = 0; g < x1.size(); ++g) {
    double a = x1[g], b = x2[g];
    o1[g] = (a - b) * (a - b) + (b - 1.0) * (b - 1.0) -
            (alpha * (a + 2.0 * b - 1.0) + alpha * (2.0 * a + b - 1.0));
    o2[g] = (b - a) * (b - a) + (a - 1.0) * (a - 1.0) -
            (alpha * (b + 2.0 * a - 1.0) + alpha * (2.0 * b + a - 1.0));
  }
  return {std::move(o1), std::move(o2)};
}

std::pair<std::vector<double>, std::vector<double>> lpx_gene_update(
    std::span<const double> o1, std::span<const double> o2, std::span<const double> x1,
    std::span<const double> x2, double epsilon_div) {
  if (o1.size() != o2.size() || o1.size() != x1.size() || o1.size() != x2.size())
    throw std::invalid_argument("lpx_gene_update: vectors must share one length");
  if (!(epsilon_div > 0.0)) throw std::invalid_argument("lpx_gene_update: epsilon_div must be positive");
  std::vector<double> y1(x1.size()), y2(x2.size());
  for (std::size_t g = 0; g < x1.size(); ++g) {
    y1[g] = o2[g] / guard_denominator(x1[g], epsilon_div);
    y2[g] = o1[g] / guard_denominator(x2[g], epsilon_div);
  }
  return {std::move(y1), std::move(y2)};
}

std::vector<double> gaussian_mutate(std::span<const double> genes, const MutationParams& params,
                                    RandomStream& rng) {
  std::vector<double> out(genes.begin(), genes.end());
  for (double& g : out) {
    if (rng.bernoulli(params.gene_prob)) g += params.sigma * rng.normal();
  }
  return out;
}

}  // namespace leo

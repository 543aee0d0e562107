#pragma once

#include <span>
#include <utility>
#include <vector>

#include "leo/random.hpp"

namespace leo {

/// Parameters of one Lagrangian Problem Crossover event. alpha is the
/// Lagrange-multiplier surrogate, drawn once per crossover event.
struct LpxParams {
  double alpha = 0.25;
  double epsilon_div = 1e-12;
};

/// Parameters of one mutation event. sigma is drawn once per mutated
/// individual; gene_prob is the independent per-gene inclusion probability.
struct MutationParams {
  double sigma = 0.0;
  double gene_prob = 0.3;
};

/// Sign-preserving epsilon floor used wherever a quotient's denominator may
/// vanish: v itself when |v| >= eps, else eps carrying v's sign (sign(0) := +1).
double guard_denominator(double v, double epsilon_div);

/// LPX offspring formulas, applied gene-wise to a parent pair:
///   o1[g] = (x1-x2)^2 + (x2-1)^2 - (a(x1+2*x2-1) + a(2*x1+x2-1))
/// and o2 with the parent roles swapped. Swapping (x1,x2) swaps (o1,o2)
/// exactly. Throws std::invalid_argument on length mismatch.
std::pair<std::vector<double>, std::vector<double>> lpx_offspring_pair(
    std::span<const double> x1, std::span<const double> x2, double alpha);

/// Gene replacement step of the crossover: y1[g] = o2[g]/guard(x1[g]),
/// y2[g] = o1[g]/guard(x2[g]). Total for finite input; the caller clamps the
/// results to problem bounds.
std::pair<std::vector<double>, std::vector<double>> lpx_gene_update(
    std::span<const double> o1, std::span<const double> o2, std::span<const double> x1,
    std::span<const double> x2, double epsilon_div);

/// Gaussian mutation: each gene independently joins the mutated index set
/// with probability gene_prob and receives sigma times a standard normal
/// draw. Genes outside the set are returned untouched.
///
/// Draw order per gene: one inclusion draw, then one normal draw only when
/// included. This keeps the sequence reproducible under a fixed seed.
std::vector<double> gaussian_mutate(std::span<const double> genes, const MutationParams& params,
                                    RandomStream& rng);

}  // namespace leo

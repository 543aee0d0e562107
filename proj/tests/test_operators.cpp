#include <doctest.h>

#include <cmath>

#include "leo/operators.hpp"

using namespace leo;

TEST_CASE("lpx offspring formulas match hand-evaluated values") {
  // (1-1)^2 + (1-1)^2 - (0.25*(1+2-1) + 0.25*(2+1-1)) = -(0.5+0.5) = -1
  auto [o1a, o2a] = lpx_offspring_pair(std::vector<double>{1.0}, std::vector<double>{1.0}, 0.25);
  CHECK(o1a[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(o2a[0] == doctest::Approx(-1.0).epsilon(1e-12));

  // (2-0)^2 + (0-1)^2 - (0.25*(2+0-1) + 0.25*(4+0-1)) = 4 + 1 - 1 = 4
  auto [o1b, o2b] = lpx_offspring_pair(std::vector<double>{2.0}, std::vector<double>{0.0}, 0.25);
  CHECK(o1b[0] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("equal parents give coinciding offspring") {
  RandomStream rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(5);
    for (auto& g : x) g = rng.uniform(-50, 50);
    double alpha = rng.uniform(0.2, 0.3);
    auto [o1, o2] = lpx_offspring_pair(x, x, alpha);
    CHECK(o1 == o2);
  }
}

TEST_CASE("swapping parents swaps the offspring exactly") {
  RandomStream rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> x1(4), x2(4);
    for (auto& g : x1) g = rng.uniform(-100, 100);
    for (auto& g : x2) g = rng.uniform(-100, 100);
    double alpha = rng.uniform(0.2, 0.3);
    auto [o1, o2] = lpx_offspring_pair(x1, x2, alpha);
    auto [s1, s2] = lpx_offspring_pair(x2, x1, alpha);
    CHECK(o1 == s2);
    CHECK(o2 == s1);
  }
}

TEST_CASE("lpx offspring rejects mismatched parents") {
  CHECK_THROWS(lpx_offspring_pair(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}, 0.25));
  CHECK_THROWS(lpx_offspring_pair(std::vector<double>{}, std::vector<double>{}, 0.25));
}

TEST_CASE("gene update divides with a sign-preserving guard") {
  std::vector<double> o1{0.0}, zero{0.0};
  auto [y1a, y2a] = lpx_gene_update(o1, std::vector<double>{6.0}, std::vector<double>{2.0},
                                    std::vector<double>{1.0}, 1e-12);
  CHECK(y1a[0] == 3.0);

  auto [y1b, y2b] = lpx_gene_update(o1, std::vector<double>{1.0}, zero,
                                    std::vector<double>{1.0}, 1e-12);
  CHECK(y1b[0] == doctest::Approx(1e12));

  auto [y1c, y2c] = lpx_gene_update(o1, std::vector<double>{-4.0}, std::vector<double>{-2.0},
                                    std::vector<double>{1.0}, 1e-12);
  CHECK(y1c[0] == 2.0);
}

TEST_CASE("guard keeps quotients finite for any finite input") {
  RandomStream rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> o1(3), o2(3), x1(3), x2(3);
    for (auto* v : {&o1, &o2, &x1, &x2})
      for (auto& g : *v) g = rng.bernoulli(0.2) ? 0.0 : rng.uniform(-1e6, 1e6);
    auto [y1, y2] = lpx_gene_update(o1, o2, x1, x2, 1e-12);
    for (double v : y1) CHECK(std::isfinite(v));
    for (double v : y2) CHECK(std::isfinite(v));
  }
}

TEST_CASE("guard sign convention treats zero as positive") {
  CHECK(guard_denominator(0.0, 1e-12) == 1e-12);
  CHECK(guard_denominator(-0.0, 1e-12) == -1e-12);
  CHECK(guard_denominator(1e-20, 1e-12) == 1e-12);
  CHECK(guard_denominator(-1e-20, 1e-12) == -1e-12);
  CHECK(guard_denominator(5.0, 1e-12) == 5.0);
}

TEST_CASE("mutation with sigma zero or gene_prob zero is the identity") {
  RandomStream rng(5);
  std::vector<double> genes{1.0, -2.0, 3.5};
  CHECK(gaussian_mutate(genes, {0.0, 1.0}, rng) == genes);
  CHECK(gaussian_mutate(genes, {0.7, 0.0}, rng) == genes);
}

TEST_CASE("mutation perturbations are standard normal scaled by sigma") {
  // Oracle: with gene_prob 1 the per-gene deltas over sigma are iid N(0,1);
  // at d = 10000, sample mean within +-0.05 and variance within +-0.05.
  RandomStream rng(17);
  const int d = 10000;
  std::vector<double> genes(d, 0.0);
  const double sigma = 0.37;
  auto out = gaussian_mutate(genes, {sigma, 1.0}, rng);
  double sum = 0, sq = 0;
  for (int i = 0; i < d; ++i) {
    double eta = (out[i] - genes[i]) / sigma;
    sum += eta;
    sq += eta * eta;
  }
  double mean = sum / d;
  double var = sq / d - mean * mean;
  CHECK(std::abs(mean) < 0.05);
  CHECK(std::abs(var - 1.0) < 0.05);
}

TEST_CASE("fraction of mutated genes approaches gene_prob") {
  RandomStream rng(21);
  const int d = 10000;
  std::vector<double> genes(d, 1.0);
  auto out = gaussian_mutate(genes, {0.5, 0.3}, rng);
  int changed = 0;
  for (int i = 0; i < d; ++i)
    if (out[i] != genes[i]) ++changed;
  CHECK(std::abs(changed / static_cast<double>(d) - 0.3) < 0.02);
}

TEST_CASE("operators are pure given the stream state") {
  std::vector<double> genes{0.5, -1.5, 2.5, 9.0};
  RandomStream a(33), b(33);
  CHECK(gaussian_mutate(genes, {0.8, 0.5}, a) == gaussian_mutate(genes, {0.8, 0.5}, b));
}

#include <doctest.h>

#include <cmath>

#include "leo/algorithm.hpp"
#include "leo/applications.hpp"

using namespace leo;
using namespace leo::apps;

TEST_CASE("albumin quotient is the plain concentration ratio") {
  IgGPanel panel;
  panel.alb_csf = 0.2;
  panel.alb_serum = 40.0;
  CHECK(albumin_quotient(panel) == doctest::Approx(0.005));

  panel.alb_csf = panel.alb_serum;
  CHECK(albumin_quotient(panel) == 1.0);
  CHECK_FALSE(panel.concentrations_valid());

  panel.alb_csf = 0.0;
  CHECK(albumin_quotient(panel) == 0.0);

  panel.alb_serum = 0.0;
  CHECK_THROWS_AS(albumin_quotient(panel), std::domain_error);
}

TEST_CASE("pathological igg follows the printed formula") {
  IgGPanel panel;
  panel.igg_csf = 5.0;
  panel.igg_serum = 0.0;
  panel.alb_csf = 0.3;
  panel.alb_serum = 40.0;
  CHECK(igg_pathological(panel) == 5.0);

  panel = IgGPanel{10.0, 1.0, 0.2, 20.0};
  // 10 - (0.43*20 - 0.2 + 0.001) * 1 = 1.599
  CHECK(igg_pathological(panel) == doctest::Approx(1.599));
}

TEST_CASE("pathological igg is linear in serum igg") {
  IgGPanel base{8.0, 2.0, 0.25, 30.0};
  double slope = -(0.43 * base.alb_serum - base.alb_csf + 0.001);
  IgGPanel bumped = base;
  bumped.igg_serum += 1.5;
  CHECK(igg_pathological(bumped) - igg_pathological(base) == doctest::Approx(1.5 * slope));
}

TEST_CASE("igg objective values at the corners and the center") {
  std::vector<double> zeros(12, 0.0), tens(12, 10.0), fives(12, 5.0);
  CHECK(igg_objective(zeros) == doctest::Approx(4.92));
  CHECK(igg_objective(tens) == doctest::Approx(5.088));
  CHECK(igg_objective(fives) == doctest::Approx(5.004));
  CHECK_THROWS(igg_objective(std::vector<double>(11, 0.0)));
}

TEST_CASE("igg objective is affine gene by gene") {
  RandomStream rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(12);
    for (auto& v : x) v = rng.uniform(0, 9);
    std::size_t i = rng.uniform_index(12);
    double t = rng.uniform(0, 1);
    std::vector<double> y = x;
    y[i] += t;
    CHECK(igg_objective(y) - igg_objective(x) == doctest::Approx(0.0014 * t).epsilon(1e-9));
  }
}

TEST_CASE("igg problem is a 12-dimensional maximization box") {
  Problem p = igg_problem();
  CHECK(p.dimension == 12);
  CHECK(p.sense == Sense::maximize);
  CHECK(*p.known_optimum == doctest::Approx(5.088));
}

TEST_CASE("cpams coefficients match hand arithmetic") {
  auto [a, b, c] = cpams_coefficients(15, 0.0, 0.1);
  CHECK(a == doctest::Approx(0.0273567).epsilon(1e-5));
  CHECK(b == doctest::Approx(-0.0049689).epsilon(1e-4));
  CHECK(c == doctest::Approx(-0.0001887).epsilon(1e-4));

  auto [a0, b0, c0] = cpams_coefficients(20, 0.0, 0.0);
  CHECK(c0 == 0.0);
  (void)a0;
  (void)b0;

  // |B| and |C| shrink as 1/d for fixed k1, k2.
  auto small_d = cpams_coefficients(15, 0.5, 0.3);
  auto large_d = cpams_coefficients(36, 0.5, 0.3);
  CHECK(std::abs(large_d[1]) < std::abs(small_d[1]));
  CHECK(std::abs(large_d[2]) < std::abs(small_d[2]));

  CHECK_THROWS_AS(cpams_coefficients(0, 0.1, 0.1), std::domain_error);
}

TEST_CASE("cpams parameter ranges are enforced") {
  CHECK_NOTHROW(CpamsParams::make(15, 0.0, 0.1));
  CHECK_NOTHROW(CpamsParams::make(36, 1.0, 0.5));
  CHECK_THROWS(CpamsParams::make(14, 0.0, 0.1));
  CHECK_THROWS(CpamsParams::make(15, 1.1, 0.1));
  CHECK_THROWS(CpamsParams::make(15, 0.0, 0.05));
}

TEST_CASE("cpams residual structural zeros") {
  CpamsParams p;
  p.d = 15;
  p.k1 = 0.0;
  p.k2 = 0.0;
  auto [a, b, c] = cpams_coefficients(p.d, p.k1, p.k2);
  p.A = a;
  p.B = b;
  p.C = c;
  CHECK(c == 0.0);
  CHECK(cpams_objective(std::vector<double>{0.0}, p) == 0.0);
}

namespace {

// Independent root oracle: bisection of the signed cubic on [0,1].
double bisect_root(const CpamsParams& p) {
  auto f = [&](double x) { return x * x * x + p.A * x * x + p.B * x + p.C; };
  double lo = 0.0, hi = 1.0;
  REQUIRE(f(lo) * f(hi) <= 0.0);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(lo) * f(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("residual vanishes at the bisection root") {
  CpamsParams p = CpamsParams::make(36, 1.0, 0.5);
  double root = bisect_root(p);
  CHECK(cpams_objective(std::vector<double>{root}, p) < 1e-12);
}

TEST_CASE("residual is non-negative everywhere on the unit interval") {
  CpamsParams p = CpamsParams::make(20, 0.5, 0.3);
  for (int i = 0; i <= 1000; ++i) {
    double x = i / 1000.0;
    CHECK(cpams_objective(std::vector<double>{x}, p) >= 0.0);
  }
}

TEST_CASE("control term combines the feedback pieces") {
  CHECK(cpams_control_term(0.7, 123.0, 0.0, 0.0) == 0.0);
  CHECK(cpams_control_term(1.0, 2.0, 0.5, 0.1) == doctest::Approx(1.2));
  CHECK(cpams_control_term(0.9, 42.0, 1.0, 0.0) == 42.0);
}

TEST_CASE("cpams problem rejects non-positive dimensions and wrong inputs") {
  CpamsParams p = CpamsParams::make(15, 0.0, 0.1);
  CHECK_THROWS(cpams_problem(p, 0));
  Problem prob = cpams_problem(p);
  CHECK(prob.dimension == 1);
  CHECK_THROWS(prob.evaluate(std::vector<double>{0.1, 0.2}));
}

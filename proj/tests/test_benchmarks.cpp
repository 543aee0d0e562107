#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>

#include "leo/benchmarks.hpp"
#include "leo/data_io.hpp"

using namespace leo;

TEST_CASE("catalog lists all 29 functions with table metadata") {
  const auto& catalog = benchmark_catalog();
  CHECK(catalog.size() == 29);
  CHECK(benchmark_spec("TF8").f_min == doctest::Approx(-418.9829));
  CHECK(benchmark_spec("CEC03").dimension == 18);
  CHECK(benchmark_spec("CEC01").dimension == 9);
  CHECK(benchmark_spec("TF14").family == Family::composite);
  CHECK(benchmark_spec("TF5").upper == 30.0);
  CHECK_THROWS(benchmark_spec("TF99"));
}

TEST_CASE("classical functions attain their table minima at the known optimum") {
  for (int tf = 1; tf <= 13; ++tf) {
    Problem p = make_classical(tf, 10);
    const auto& spec = benchmark_spec("TF" + std::to_string(tf));
    REQUIRE(spec.optimum.has_value());
    double expected = tf == 8 ? -4189.829 : 0.0;
    double tol = tf == 8 ? 1e-2 : 1e-6;
    // TF7's noise forced off with a null stream.
    double v = p.evaluate(*spec.optimum, nullptr);
    CHECK_MESSAGE(std::abs(v - expected) <= tol, "TF" << tf << " at optimum gave " << v);
  }
}

TEST_CASE("shift relocates the optimum") {
  Problem p = make_classical(1, 10);  // sphere shifted by -30
  std::vector<double> at_shift(10, -30.0), at_zero(10, 0.0);
  CHECK(p.evaluate(at_shift) == 0.0);
  CHECK(p.evaluate(at_zero) == doctest::Approx(10 * 900.0));
}

TEST_CASE("hand-evaluated classical values") {
  std::vector<double> zeros(10, 0.0), ones(10, 1.0);
  std::span<const double> no_shift;
  CHECK(eval_classical(5, ones, no_shift, nullptr) == 0.0);
  CHECK(eval_classical(5, zeros, no_shift, nullptr) == doctest::Approx(9.0));  // nine (0-1)^2 terms
  CHECK(eval_classical(9, zeros, no_shift, nullptr) == 0.0);
  CHECK(eval_classical(10, zeros, no_shift, nullptr) == doctest::Approx(0.0));
  std::vector<double> schwefel(10, 420.9687);
  CHECK(eval_classical(8, schwefel, no_shift, nullptr) == doctest::Approx(-4189.829).epsilon(1e-5));
}

TEST_CASE("noisy quartic draws its noise from the caller's stream") {
  Problem p = make_classical(7, 10);
  std::vector<double> x(10, -0.25);  // the shift position, base value 0
  CHECK(p.evaluate(x, nullptr) == 0.0);
  RandomStream a(5), b(5);
  double va = p.evaluate(x, &a);
  double vb = p.evaluate(x, &b);
  CHECK(va == vb);
  CHECK(va >= 0.0);
  CHECK(va < 1.0);
}

TEST_CASE("classical evaluators reject wrong dimensions") {
  Problem p = make_classical(3, 10);
  CHECK_THROWS(p.evaluate(std::vector<double>(9, 0.0)));
  CHECK_THROWS(eval_composite(14, std::vector<double>(9, 0.0)));
  CHECK_THROWS(eval_cec2019(4, std::vector<double>(9, 0.0)));
}

namespace {

// Independent analytic gradients for the smooth functions, coded directly
// from the formulas (not through the evaluator).
std::vector<double> grad_tf1(const std::vector<double>& z) {
  std::vector<double> g(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) g[i] = 2.0 * z[i];
  return g;
}

std::vector<double> grad_tf5(const std::vector<double>& z) {
  std::vector<double> g(z.size(), 0.0);
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    double t = z[i + 1] - z[i] * z[i];
    g[i] += -400.0 * z[i] * t + 2.0 * (z[i] - 1.0);
    g[i + 1] += 200.0 * t;
  }
  return g;
}

std::vector<double> grad_tf10(const std::vector<double>& z) {
  const double pi = std::numbers::pi;
  double r2 = 0, s = 0;
  for (double v : z) {
    r2 += v * v;
    s += std::cos(2 * pi * v);
  }
  double r = std::sqrt(r2);
  double n = static_cast<double>(z.size());
  std::vector<double> g(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    g[i] = 4.0 * std::exp(-0.2 * r) * z[i] / r +
           (2 * pi / n) * std::sin(2 * pi * z[i]) * std::exp(s / n);
  return g;
}

}  // namespace

TEST_CASE("central finite differences match the analytic gradients") {
  RandomStream rng(77);
  struct Case {
    int tf;
    double box;
    std::vector<double> (*grad)(const std::vector<double>&);
  };
  for (const Case& c : {Case{1, 50.0, grad_tf1}, Case{5, 2.0, grad_tf5}, Case{10, 4.0, grad_tf10}}) {
    std::span<const double> no_shift;
    for (int point = 0; point < 5; ++point) {
      std::vector<double> z(10);
      for (auto& v : z) v = rng.uniform(-c.box, c.box);
      auto analytic = c.grad(z);
      const double h = 1e-6;
      for (int i = 0; i < 10; ++i) {
        std::vector<double> zp = z, zm = z;
        zp[i] += h;
        zm[i] -= h;
        double fd = (eval_classical(c.tf, zp, no_shift, nullptr) -
                     eval_classical(c.tf, zm, no_shift, nullptr)) /
                    (2 * h);
        double scale = std::max(1.0, std::abs(analytic[i]));
        CHECK(std::abs(fd - analytic[i]) / scale < 1e-4);
      }
    }
  }
}

TEST_CASE("composite value is zero at the first bundled optimum") {
  for (int tf = 14; tf <= 19; ++tf) {
    auto file = read_matrix_file(data_directory() + "/tf" + std::to_string(tf) + "_optima.txt");
    REQUIRE(file.rows.size() == 10);
    CHECK(std::abs(eval_composite(tf, file.rows[0])) < 1e-6);
  }
}

TEST_CASE("composite values never fall below the smallest bias") {
  RandomStream rng(31);
  for (int tf = 14; tf <= 19; ++tf) {
    double lowest = 1e300;
    for (int i = 0; i < 10000; ++i) {
      std::vector<double> x(10);
      for (auto& v : x) v = rng.uniform(-5.0, 5.0);
      lowest = std::min(lowest, eval_composite(tf, x));
    }
    CHECK(lowest >= 0.0);
  }
}

TEST_CASE("composite evaluation is pure") {
  std::vector<double> x{0.3, -1.2, 4.9, -4.9, 0.0, 2.2, -3.3, 1.1, 0.7, -0.1};
  CHECK(eval_composite(17, x) == eval_composite(17, x));
}

TEST_CASE("bundled composite optima lie inside the search range") {
  for (int tf = 14; tf <= 19; ++tf) {
    auto file = read_matrix_file(data_directory() + "/tf" + std::to_string(tf) + "_optima.txt");
    for (const auto& row : file.rows)
      for (double v : row) {
        CHECK(v >= -5.0);
        CHECK(v <= 5.0);
      }
  }
}

TEST_CASE("cec rotation matrices are orthogonal and shifts in range") {
  for (int fn = 4; fn <= 10; ++fn) {
    char id[8];
    std::snprintf(id, sizeof(id), "cec%02d", fn);
    auto rot = read_matrix_file(data_directory() + "/" + std::string(id) + "_rotation.txt");
    const int d = 10;
    REQUIRE(rot.rows.size() == d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        double dot = 0;
        for (int k = 0; k < d; ++k) dot += rot.rows[k][i] * rot.rows[k][j];
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-9);
      }
    }
    auto shift = read_matrix_file(data_directory() + "/" + std::string(id) + "_shift.txt");
    for (double v : shift.rows[0]) {
      CHECK(v >= -100.0);
      CHECK(v <= 100.0);
    }
  }
}

TEST_CASE("cec functions evaluate to 1 at their optima") {
  // Chebyshev coefficients of the degree-8 polynomial the fit targets.
  std::vector<double> cheb{128, 0, -256, 0, 160, 0, -32, 0, 1};
  CHECK(eval_cec2019(1, cheb) == doctest::Approx(1.0).epsilon(1e-9));

  // Row-major inverse of the 4x4 Hilbert matrix.
  std::vector<double> inv_hilbert{16,   -120,  240,   -140,  -120, 1200,  -2700, 1680,
                                  240,  -2700, 6480,  -4200, -140, 1680,  -4200, 2800};
  CHECK(eval_cec2019(2, inv_hilbert) == doctest::Approx(1.0).epsilon(1e-9));

  for (int fn = 4; fn <= 10; ++fn) {
    char id[8];
    std::snprintf(id, sizeof(id), "cec%02d", fn);
    auto shift = read_matrix_file(data_directory() + "/" + std::string(id) + "_shift.txt");
    CHECK(eval_cec2019(fn, shift.rows[0]) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("cec values respect the unit floor") {
  RandomStream rng(13);
  for (int i = 0; i < 2000; ++i) {
    std::vector<double> x(16);
    for (auto& v : x) v = rng.uniform(-16384.0, 16384.0);
    CHECK(eval_cec2019(2, x) >= 1.0);
  }
  for (int i = 0; i < 500; ++i) {
    std::vector<double> x(10);
    for (auto& v : x) v = rng.uniform(-100.0, 100.0);
    for (int fn = 4; fn <= 10; ++fn) CHECK(eval_cec2019(fn, x) >= 1.0 - 1e-9);
  }
}

TEST_CASE("benchmark problems are constructible for every catalog id") {
  for (const auto& spec : benchmark_catalog()) {
    Problem p = make_benchmark(spec.id);
    CHECK(p.dimension == spec.dimension);
    CHECK_NOTHROW(p.validate());
  }
  CHECK_THROWS(make_benchmark("nope"));
}

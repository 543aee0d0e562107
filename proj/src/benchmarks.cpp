#include "leo/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "leo/data_io.hpp"

namespace leo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// ---------------------------------------------------------------------------
// Classical battery, evaluated at the already-shifted point z.

double penalty_u(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

double tf_sphere(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v;
  return s;
}

double tf2_abs_sum_prod(std::span<const double> z) {
  double s = 0.0, p = 1.0;
  for (double v : z) {
    s += std::abs(v);
    p *= std::abs(v);
  }
  return s + p;
}

double tf3_cumulative(std::span<const double> z) {
  double s = 0.0, prefix = 0.0;
  for (double v : z) {
    prefix += v;
    s += prefix * prefix;
  }
  return s;
}

double tf4_max_abs(std::span<const double> z) {
  double m = 0.0;
  for (double v : z) m = std::max(m, std::abs(v));
  return m;
}

double tf5_rosenbrock(std::span<const double> z) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    double a = z[i + 1] - z[i] * z[i];
    double b = z[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double tf6_step(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) {
    double t = std::floor(v + 0.5);
    s += t * t;
  }
  return s;
}

double tf7_noisy_quartic(std::span<const double> z, RandomStream* rng) {
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += static_cast<double>(i + 1) * std::pow(z[i], 4);
  if (rng) s += rng->unit();
  return s;
}

double tf8_schwefel(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += -v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double tf9_rastrigin(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  return s;
}

// As printed in the source table: no 1/n under the square root. Still
// attains 0 at the origin.
double tf10_ackley_printed(std::span<const double> z) {
  double sum_sq = 0.0, sum_cos = 0.0;
  for (double v : z) {
    sum_sq += v * v;
    sum_cos += std::cos(2.0 * kPi * v);
  }
  double n = static_cast<double>(z.size());
  return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq)) - std::exp(sum_cos / n) + 20.0 + kE;
}

double tf11_griewank(std::span<const double> z) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    s += z[i] * z[i];
    p *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0;
}

double tf12_penalized(std::span<const double> z) {
  const std::size_t n = z.size();
  auto y = [&](std::size_t i) { return 1.0 + (z[i] + 1.0) / 4.0; };
  double s = 10.0 * std::pow(std::sin(kPi * y(0)), 2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double t = y(i) - 1.0;
    s += t * t * (1.0 + 10.0 * std::pow(std::sin(kPi * y(i + 1)), 2));
  }
  double last = y(n - 1) - 1.0;
  s += last * last;
  s *= kPi / static_cast<double>(n);
  for (double v : z) s += penalty_u(v, 10.0, 100.0, 4.0);
  return s;
}

double tf13_penalized(std::span<const double> z) {
  const std::size_t n = z.size();
  double s = std::pow(std::sin(3.0 * kPi * z[0]), 2);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double t = z[i] - 1.0;
    s += t * t * (1.0 + std::pow(std::sin(3.0 * kPi * z[i + 1]), 2));
  }
  double last = z[n - 1] - 1.0;
  s += last * last * (1.0 + std::pow(std::sin(2.0 * kPi * z[n - 1]), 2));
  s *= 0.1;
  for (double v : z) s += penalty_u(v, 5.0, 100.0, 4.0);
  return s;
}

// ---------------------------------------------------------------------------
// Basic functions shared by the composite battery (classical normalized
// forms, all non-negative with minimum 0 at the origin).

double basic_sphere(std::span<const double> z) { return tf_sphere(z); }
double basic_griewank(std::span<const double> z) { return tf11_griewank(z); }
double basic_rastrigin(std::span<const double> z) { return tf9_rastrigin(z); }

double basic_ackley(std::span<const double> z) {
  double sum_sq = 0.0, sum_cos = 0.0;
  for (double v : z) {
    sum_sq += v * v;
    sum_cos += std::cos(2.0 * kPi * v);
  }
  double n = static_cast<double>(z.size());
  return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + 20.0 + kE;
}

double basic_weierstrass(std::span<const double> z) {
  constexpr double a = 0.5, b = 3.0;
  constexpr int k_max = 20;
  double s = 0.0;
  for (double v : z) {
    for (int k = 0; k <= k_max; ++k)
      s += std::pow(a, k) * std::cos(2.0 * kPi * std::pow(b, k) * (v + 0.5));
  }
  double base = 0.0;
  for (int k = 0; k <= k_max; ++k) base += std::pow(a, k) * std::cos(kPi * std::pow(b, k));
  return s - static_cast<double>(z.size()) * base;
}

using BasicFn = double (*)(std::span<const double>);

// ---------------------------------------------------------------------------
// Composite construction (CEC-2005 recipe): gaussian weights with
// max-emphasis normalization, per-constituent value normalization to a
// common scale C, and a bias ladder of 100*(i-1).

struct CompositeDef {
  std::array<BasicFn, 10> fns;
  std::array<double, 10> delta;
  std::array<double, 10> lambda;
};

CompositeDef composite_def(int tf) {
  auto all = [](BasicFn f) {
    return std::array<BasicFn, 10>{f, f, f, f, f, f, f, f, f, f};
  };
  std::array<double, 10> ones{1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  switch (tf) {
    case 14:
      return {all(basic_sphere), ones,
              {.05, .05, .05, .05, .05, .05, .05, .05, .05, .05}};
    case 15:
      return {all(basic_griewank), ones,
              {.05, .05, .05, .05, .05, .05, .05, .05, .05, .05}};
    case 16:
      return {all(basic_griewank), ones, ones};
    case 17:
      return {{basic_ackley, basic_ackley, basic_rastrigin, basic_rastrigin, basic_weierstrass,
               basic_weierstrass, basic_griewank, basic_griewank, basic_sphere, basic_sphere},
              ones,
              {5.0 / 32, 5.0 / 32, 1, 1, 10, 10, .05, .05, .05, .05}};
    case 18:
      return {{basic_rastrigin, basic_rastrigin, basic_weierstrass, basic_weierstrass,
               basic_griewank, basic_griewank, basic_ackley, basic_ackley, basic_sphere,
               basic_sphere},
              ones,
              {0.2, 0.2, 10, 10, .05, .05, 5.0 / 32, 5.0 / 32, .05, .05}};
    case 19:
      return {{basic_rastrigin, basic_rastrigin, basic_weierstrass, basic_weierstrass,
               basic_griewank, basic_griewank, basic_ackley, basic_ackley, basic_sphere,
               basic_sphere},
              {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0},
              {0.1 * 0.2, 0.2 * 0.2, 0.3 * 10, 0.4 * 10, 0.5 * .05, 0.6 * .05, 0.7 * 5.0 / 32,
               0.8 * 5.0 / 32, 0.9 * .05, 1.0 * .05}};
    default:
      throw std::invalid_argument("composite id out of range");
  }
}

struct CompositeData {
  CompositeDef def;
  std::vector<std::vector<double>> optima;  // 10 rows x 10 cols
  std::array<double, 10> f_max{};           // |f_i(x_max / lambda_i)|
};

std::string data_path(const std::string& name) {
  return (std::filesystem::path(data_directory()) / name).string();
}

const CompositeData& composite_data(int tf) {
  static std::array<std::unique_ptr<CompositeData>, 6> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(tf - 14)];
  if (!slot) {
    auto data = std::make_unique<CompositeData>();
    data->def = composite_def(tf);
    auto file = read_matrix_file(data_path("tf" + std::to_string(tf) + "_optima.txt"));
    if (file.rows.size() != 10)
      throw std::runtime_error("composite optima file must hold 10 rows");
    for (const auto& row : file.rows)
      if (row.size() != 10) throw std::runtime_error("composite optima rows must have 10 entries");
    data->optima = file.rows;
    std::vector<double> probe(10);
    for (int i = 0; i < 10; ++i) {
      for (int g = 0; g < 10; ++g) probe[g] = 5.0 / data->def.lambda[i];
      data->f_max[i] = std::abs(data->def.fns[i](probe));
    }
    slot = std::move(data);
  }
  return *slot;
}

// ---------------------------------------------------------------------------
// CEC-2019 "100-digit challenge" definitions. CEC04-CEC10 apply the bundled
// shift vector then rotation matrix (with the per-function shrink rate)
// before the base formula; every function carries a +1 offset so the floor
// is exactly 1.

struct CecTransform {
  std::vector<double> shift;
  std::vector<std::vector<double>> rotation;
};

const CecTransform& cec_transform(int fn) {
  static std::array<std::unique_ptr<CecTransform>, 11> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(fn)];
  if (!slot) {
    auto data = std::make_unique<CecTransform>();
    char id[8];
    std::snprintf(id, sizeof(id), "cec%02d", fn);
    auto shift = read_matrix_file(data_path(std::string(id) + "_shift.txt"));
    if (shift.rows.size() != 1) throw std::runtime_error("shift file must hold one row");
    data->shift = shift.rows.front();
    auto rot = read_matrix_file(data_path(std::string(id) + "_rotation.txt"));
    data->rotation = rot.rows;
    const std::size_t d = data->shift.size();
    if (rot.rows.size() != d)
      throw std::runtime_error("rotation matrix must be square of the shift dimension");
    for (const auto& row : rot.rows)
      if (row.size() != d) throw std::runtime_error("rotation matrix must be square");
    slot = std::move(data);
  }
  return *slot;
}

std::vector<double> shift_rotate(std::span<const double> x, const CecTransform& t,
                                 double shrink) {
  const std::size_t d = x.size();
  std::vector<double> y(d), z(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = (x[i] - t.shift[i]) * shrink;
  for (std::size_t i = 0; i < d; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += t.rotation[i][j] * y[j];
    z[i] = acc;
  }
  return z;
}

double cec01_chebyshev(std::span<const double> x) {
  const int d = static_cast<int>(x.size());
  // T_{d-1}(1.2) by the Chebyshev recurrence.
  double a = 1.0, b = 1.2, bound = 1.2;
  for (int i = 0; i < d - 2; ++i) {
    bound = 2.4 * b - a;
    a = b;
    b = bound;
  }
  auto horner = [&](double t) {
    double px = x[0];
    for (int j = 1; j < d; ++j) px = t * px + x[j];
    return px;
  };
  double sum = 0.0;
  const int samples = 32 * d;
  for (int k = 0; k <= samples; ++k) {
    double px = horner(-1.0 + 2.0 * k / samples);
    if (px > 1.0) sum += (px - 1.0) * (px - 1.0);
    else if (px < -1.0) sum += (px + 1.0) * (px + 1.0);
  }
  for (double t : {1.2, -1.2}) {
    double px = horner(t);
    if (px < bound) sum += (px - bound) * (px - bound);
  }
  return sum;
}

double cec02_inverse_hilbert(std::span<const double> x) {
  const int b = static_cast<int>(std::sqrt(static_cast<double>(x.size())));
  double sum = 0.0;
  for (int i = 0; i < b; ++i) {
    for (int k = 0; k < b; ++k) {
      double y = 0.0;
      for (int j = 0; j < b; ++j)
        y += x[static_cast<std::size_t>(k + b * j)] / static_cast<double>(i + j + 1);
      sum += std::abs(y - (i == k ? 1.0 : 0.0));
    }
  }
  return sum;
}

double cec03_lennard_jones(std::span<const double> x) {
  const int atoms = static_cast<int>(x.size()) / 3;
  double sum = 0.0;
  for (int i = 0; i < atoms - 1; ++i) {
    for (int j = i + 1; j < atoms; ++j) {
      double dist_sq = 0.0;
      for (int c = 0; c < 3; ++c) {
        double diff = x[static_cast<std::size_t>(3 * i + c)] - x[static_cast<std::size_t>(3 * j + c)];
        dist_sq += diff * diff;
      }
      double r6 = dist_sq * dist_sq * dist_sq;
      if (r6 > 1e-10)
        sum += (1.0 / r6 - 2.0) / r6;
      else
        sum += 1e20;
    }
  }
  // Known 6-atom cluster minimum; lifts the floor to 0.
  return sum + 12.712062;
}

double cec07_modified_schwefel(std::span<const double> z_in) {
  const double n = static_cast<double>(z_in.size());
  double s = 0.0;
  for (double zv : z_in) {
    double z = zv + 420.9687462275036;
    if (z > 500.0) {
      double w = 500.0 - std::fmod(z, 500.0);
      s -= w * std::sin(std::sqrt(std::abs(w)));
      double t = (z - 500.0) / 100.0;
      s += t * t / n;
    } else if (z < -500.0) {
      double w = -500.0 + std::fmod(std::abs(z), 500.0);
      s -= w * std::sin(std::sqrt(std::abs(w)));
      double t = (z + 500.0) / 100.0;
      s += t * t / n;
    } else {
      s -= z * std::sin(std::sqrt(std::abs(z)));
    }
  }
  return s + 418.9828872724338 * n;
}

double cec08_expanded_schaffer(std::span<const double> z) {
  auto pair_term = [](double a, double b) {
    double q = a * a + b * b;
    double num = std::pow(std::sin(std::sqrt(q)), 2) - 0.5;
    double den = 1.0 + 0.001 * q;
    return 0.5 + num / (den * den);
  };
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) s += pair_term(z[i], z[i + 1]);
  s += pair_term(z.back(), z.front());
  return s;
}

double cec09_happy_cat(std::span<const double> z_in) {
  const double n = static_cast<double>(z_in.size());
  double r2 = 0.0, sum_z = 0.0;
  for (double zv : z_in) {
    double z = zv - 1.0;  // optimum relocated to the shift point
    r2 += z * z;
    sum_z += z;
  }
  return std::pow(std::abs(r2 - n), 0.25) + (0.5 * r2 + sum_z) / n + 0.5;
}

}  // namespace

double eval_classical(int tf, std::span<const double> x, std::span<const double> shift,
                      RandomStream* rng) {
  std::vector<double> shifted;
  std::span<const double> z = x;
  if (!shift.empty()) {
    if (shift.size() != x.size())
      throw std::invalid_argument("eval_classical: shift length mismatch");
    shifted.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - shift[i];
    z = shifted;
  }
  switch (tf) {
    case 1: return tf_sphere(z);
    case 2: return tf2_abs_sum_prod(z);
    case 3: return tf3_cumulative(z);
    case 4: return tf4_max_abs(z);
    case 5: return tf5_rosenbrock(z);
    case 6: return tf6_step(z);
    case 7: return tf7_noisy_quartic(z, rng);
    case 8: return tf8_schwefel(z);
    case 9: return tf9_rastrigin(z);
    case 10: return tf10_ackley_printed(z);
    case 11: return tf11_griewank(z);
    case 12: return tf12_penalized(z);
    case 13: return tf13_penalized(z);
    default: throw std::invalid_argument("classical id out of range");
  }
}

double eval_composite(int tf, std::span<const double> x) {
  if (tf < 14 || tf > 19) throw std::invalid_argument("composite id out of range");
  if (x.size() != 10) throw std::invalid_argument("composite functions are 10-dimensional");
  const CompositeData& data = composite_data(tf);
  const int d = 10;

  std::array<double, 10> w{};
  double w_max = 0.0;
  for (int i = 0; i < 10; ++i) {
    double dist_sq = 0.0;
    for (int g = 0; g < d; ++g) {
      double diff = x[g] - data.optima[i][g];
      dist_sq += diff * diff;
    }
    w[i] = std::exp(-dist_sq / (2.0 * d * data.def.delta[i] * data.def.delta[i]));
    w_max = std::max(w_max, w[i]);
  }
  double w_sum = 0.0;
  for (int i = 0; i < 10; ++i) {
    if (w[i] != w_max) w[i] *= 1.0 - std::pow(w_max, 10.0);
    w_sum += w[i];
  }

  constexpr double kScale = 2000.0;
  std::vector<double> stretched(static_cast<std::size_t>(d));
  double total = 0.0;
  for (int i = 0; i < 10; ++i) {
    if (w[i] == 0.0) continue;
    for (int g = 0; g < d; ++g)
      stretched[g] = (x[g] - data.optima[i][g]) / data.def.lambda[i];
    double fi = kScale * data.def.fns[i](stretched) / data.f_max[i];
    total += (w[i] / w_sum) * (fi + 100.0 * i);
  }
  return total;
}

double eval_cec2019(int fn, std::span<const double> x) {
  static constexpr int dims[11] = {0, 9, 16, 18, 10, 10, 10, 10, 10, 10, 10};
  if (fn < 1 || fn > 10) throw std::invalid_argument("cec id out of range");
  if (x.size() != static_cast<std::size_t>(dims[fn]))
    throw std::invalid_argument("cec evaluation with wrong dimension");
  switch (fn) {
    case 1: return cec01_chebyshev(x) + 1.0;
    case 2: return cec02_inverse_hilbert(x) + 1.0;
    case 3: return cec03_lennard_jones(x) + 1.0;
    default: break;
  }
  const CecTransform& t = cec_transform(fn);
  switch (fn) {
    case 4: return basic_rastrigin(shift_rotate(x, t, 5.12 / 100.0)) + 1.0;
    case 5: return basic_griewank(shift_rotate(x, t, 600.0 / 100.0)) + 1.0;
    case 6: return basic_weierstrass(shift_rotate(x, t, 0.5 / 100.0)) + 1.0;
    case 7: return cec07_modified_schwefel(shift_rotate(x, t, 1000.0 / 100.0)) + 1.0;
    case 8: return cec08_expanded_schaffer(shift_rotate(x, t, 1.0)) + 1.0;
    case 9: return cec09_happy_cat(shift_rotate(x, t, 5.0 / 100.0)) + 1.0;
    case 10: return basic_ackley(shift_rotate(x, t, 1.0)) + 1.0;
    default: throw std::invalid_argument("cec id out of range");
  }
}

namespace {

std::vector<double> fill(int d, double v) { return std::vector<double>(static_cast<std::size_t>(d), v); }

std::optional<std::vector<double>> classical_shift(int tf, int d) {
  switch (tf) {
    case 1: case 3: case 4: return fill(d, -30.0);
    case 2: return fill(d, -3.0);
    case 5: return fill(d, -15.0);
    case 6: return fill(d, -750.0);
    case 7: return fill(d, -0.25);
    case 8: return fill(d, -300.0);
    case 9: return fill(d, -2.0);
    case 10: return std::nullopt;
    case 11: return fill(d, -400.0);
    case 12: {
      auto s = fill(d, 30.0);  // printed pattern: first entry -30, the rest +30
      s[0] = -30.0;
      return s;
    }
    case 13: return fill(d, -100.0);
    default: return std::nullopt;
  }
}

double classical_range(int tf) {
  switch (tf) {
    case 1: case 3: case 4: case 6: return 100.0;
    case 2: return 10.0;
    case 5: return 30.0;
    case 7: return 1.28;
    case 8: return 500.0;
    case 9: return 5.12;
    case 10: return 32.0;
    case 11: return 600.0;
    case 12: case 13: return 50.0;
    default: return 0.0;
  }
}

/// x-space argmin: the base optimum z* plus the shift.
std::optional<std::vector<double>> classical_optimum(int tf, int d) {
  double z_star;
  switch (tf) {
    case 1: case 2: case 3: case 4: case 6: case 7: case 9: case 10: case 11: z_star = 0.0; break;
    case 5: case 13: z_star = 1.0; break;
    case 12: z_star = -1.0; break;
    case 8: z_star = 420.9687; break;
    default: return std::nullopt;
  }
  auto opt = fill(d, z_star);
  if (auto s = classical_shift(tf, d)) {
    for (int i = 0; i < d; ++i) opt[static_cast<std::size_t>(i)] += (*s)[static_cast<std::size_t>(i)];
  }
  return opt;
}

std::vector<BenchmarkSpec> build_catalog() {
  std::vector<BenchmarkSpec> specs;
  for (int tf = 1; tf <= 13; ++tf) {
    BenchmarkSpec s;
    s.id = "TF" + std::to_string(tf);
    s.dimension = 10;
    s.upper = classical_range(tf);
    s.lower = -s.upper;
    s.shift = classical_shift(tf, 10);
    s.f_min = tf == 8 ? -418.9829 : 0.0;
    s.family = tf <= 7 ? Family::unimodal : Family::multimodal;
    s.optimum = classical_optimum(tf, 10);
    specs.push_back(std::move(s));
  }
  for (int tf = 14; tf <= 19; ++tf) {
    BenchmarkSpec s;
    s.id = "TF" + std::to_string(tf);
    s.dimension = 10;
    s.lower = -5.0;
    s.upper = 5.0;
    s.f_min = 0.0;
    s.family = Family::composite;
    specs.push_back(std::move(s));
  }
  static constexpr int cec_dims[10] = {9, 16, 18, 10, 10, 10, 10, 10, 10, 10};
  static constexpr double cec_ranges[10] = {8192, 16384, 4, 100, 100, 100, 100, 100, 100, 100};
  for (int fn = 1; fn <= 10; ++fn) {
    BenchmarkSpec s;
    char id[8];
    std::snprintf(id, sizeof(id), "CEC%02d", fn);
    s.id = id;
    s.dimension = cec_dims[fn - 1];
    s.upper = cec_ranges[fn - 1];
    s.lower = -s.upper;
    s.rotated = fn >= 4;
    s.f_min = 1.0;
    s.family = Family::cec2019;
    specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace

const std::vector<BenchmarkSpec>& benchmark_catalog() {
  static const std::vector<BenchmarkSpec> catalog = build_catalog();
  return catalog;
}

const BenchmarkSpec& benchmark_spec(const std::string& id) {
  for (const auto& s : benchmark_catalog())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown benchmark id: " + id);
}

Problem make_classical(int tf, int dimension) {
  if (tf < 1 || tf > 13) throw std::invalid_argument("classical id out of range");
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  Problem p;
  p.id = "TF" + std::to_string(tf);
  if (dimension != 10) p.id += "@" + std::to_string(dimension);
  p.dimension = dimension;
  double range = classical_range(tf);
  p.lower = fill(dimension, -range);
  p.upper = fill(dimension, range);
  p.sense = Sense::minimize;
  p.shift = classical_shift(tf, dimension);
  p.known_optimum = tf == 8 ? -418.9829 * dimension : 0.0;
  std::vector<double> shift = p.shift.value_or(std::vector<double>{});
  p.objective = [tf, shift](std::span<const double> x, RandomStream* rng) {
    return eval_classical(tf, x, shift, rng);
  };
  return p;
}

Problem make_benchmark(const std::string& id) {
  const BenchmarkSpec& spec = benchmark_spec(id);
  if (spec.family == Family::unimodal || spec.family == Family::multimodal) {
    int tf = std::stoi(spec.id.substr(2));
    return make_classical(tf, spec.dimension);
  }
  Problem p;
  p.id = spec.id;
  p.dimension = spec.dimension;
  p.lower = fill(spec.dimension, spec.lower);
  p.upper = fill(spec.dimension, spec.upper);
  p.sense = Sense::minimize;
  p.known_optimum = spec.f_min;
  if (spec.family == Family::composite) {
    int tf = std::stoi(spec.id.substr(2));
    composite_data(tf);  // surface missing data files before any run
    p.objective = [tf](std::span<const double> x, RandomStream*) { return eval_composite(tf, x); };
  } else {
    int fn = std::stoi(spec.id.substr(3));
    if (fn >= 4) cec_transform(fn);
    p.objective = [fn](std::span<const double> x, RandomStream*) { return eval_cec2019(fn, x); };
  }
  return p;
}

}  // namespace leo

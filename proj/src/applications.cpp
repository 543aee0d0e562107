#include "leo/applications.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace leo::apps {

double albumin_quotient(const IgGPanel& panel) {
  if (panel.alb_serum <= 0.0)
    throw std::domain_error("albumin_quotient: serum concentration must be positive");
  return panel.alb_csf / panel.alb_serum;
}

double igg_pathological(const IgGPanel& panel) {
  return panel.igg_csf -
         (0.43 * panel.alb_serum - panel.alb_csf + 0.001) * panel.igg_serum;
}

double igg_objective(std::span<const double> x) {
  if (x.size() != 12) throw std::invalid_argument("igg_objective expects 12 fractions");
  double sum = 0.0;
  for (double v : x) sum += 0.41 + 0.0014 * v;
  return sum;
}

Problem igg_problem() {
  Problem p;
  p.id = "igg";
  p.dimension = 12;
  p.lower.assign(12, 0.0);
  p.upper.assign(12, 10.0);
  p.sense = Sense::maximize;
  p.known_optimum = 12 * 0.41 + 0.0014 * 120.0;  // 5.088 at the all-tens corner
  p.objective = [](std::span<const double> x, RandomStream*) { return igg_objective(x); };
  return p;
}

std::array<double, 3> cpams_coefficients(int d, double k1, double k2) {
  if (d == 0) throw std::domain_error("cpams_coefficients: d must be nonzero");
  double inv_d = 1.0 / static_cast<double>(d);
  return {0.0283 * (1.0 + inv_d - k2), (0.0283 - 1.0283 * k2) * inv_d,
          (0.0013 * k1 - 0.0283 * k2) * inv_d};
}

CpamsParams CpamsParams::make(int d, double k1, double k2) {
  if (d < 15 || d > 36) throw std::invalid_argument("cpams: d must lie in [15, 36]");
  if (k1 < 0.0 || k1 > 1.0) throw std::invalid_argument("cpams: k1 must lie in [0, 1]");
  if (k2 < 0.1 || k2 > 0.5) throw std::invalid_argument("cpams: k2 must lie in [0.1, 0.5]");
  CpamsParams p;
  p.d = d;
  p.k1 = k1;
  p.k2 = k2;
  auto [a, b, c] = cpams_coefficients(d, k1, k2);
  p.A = a;
  p.B = b;
  p.C = c;
  return p;
}

double cpams_objective(std::span<const double> x, const CpamsParams& params) {
  if (x.empty()) throw std::invalid_argument("cpams_objective expects at least one variable");
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (double v : x) {
    s1 += v;
    s2 += v * v;
    s3 += v * v * v;
  }
  return std::abs(s3 + params.A * s2 + params.B * s1 + params.C);
}

double cpams_control_term(double infected, double f_value, double k1, double k2) {
  return k1 * f_value + k2 * (infected + infected * infected * infected);
}

Problem cpams_problem(const CpamsParams& params, int n) {
  if (n < 1) throw std::invalid_argument("cpams_problem: dimension must be positive");
  Problem p;
  char id[48];
  std::snprintf(id, sizeof(id), "cpams_d%d_k1_%g_k2_%g", params.d, params.k1, params.k2);
  p.id = id;
  p.dimension = n;
  p.lower.assign(static_cast<std::size_t>(n), 0.0);
  p.upper.assign(static_cast<std::size_t>(n), 1.0);
  p.sense = Sense::minimize;
  p.known_optimum = 0.0;
  p.objective = [params](std::span<const double> x, RandomStream*) {
    return cpams_objective(x, params);
  };
  return p;
}

}  // namespace leo::apps

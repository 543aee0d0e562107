#pragma once

#include <array>
#include <span>

#include "leo/core.hpp"

namespace leo::apps {

/// Laboratory panel for the immunoglobulin-G evaluation problem.
/// Concentrations share one unit family (e.g. mg/L).
struct IgGPanel {
  double igg_csf = 0.0;
  double igg_serum = 0.0;
  double alb_csf = 0.0;
  double alb_serum = 0.0;
  /// Validity band of the underlying regression line; metadata only, never a
  /// search constraint.
  double regression_tolerance = 0.001;

  bool concentrations_valid() const {
    return igg_csf > 0.0 && igg_serum > 0.0 && alb_csf > 0.0 && alb_serum > alb_csf;
  }
};

/// Q_Alb = Alb_CSF / Alb_serum. Throws std::domain_error when the serum
/// concentration is not positive.
double albumin_quotient(const IgGPanel& panel);

/// Locally produced pathological IgG concentration in CSF:
/// IgGp = IgG_CSF - (0.43*Alb_serum - Alb_CSF + 0.001) * IgG_serum.
double igg_pathological(const IgGPanel& panel);

/// Regression-sum objective over the twelve gel fractions:
/// Y(x) = sum_i (0.41 + 0.0014 * x_i), maximized over [0,10]^12.
double igg_objective(std::span<const double> x);

/// The IgG evaluation packaged as a maximization Problem
/// (12 dimensions, bounds [0,10], analytic optimum 5.088 at the upper corner).
Problem igg_problem();

/// Protocol sizes used by the IgG experiment: 12 agents, 150 iterations.
inline constexpr int kIgGAgents = 12;
inline constexpr int kIgGIterations = 150;

/// Parameters of the manufacturing-system bifurcation-control cubic.
struct CpamsParams {
  int d = 15;        ///< node count, 15..36
  double k1 = 0.0;   ///< variable parameter, 0..1
  double k2 = 0.1;   ///< feedback parameter, 0.1..0.5
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  /// Computes A, B, C from (d, k1, k2). Throws std::invalid_argument outside
  /// the documented ranges, std::domain_error for d = 0.
  static CpamsParams make(int d, double k1, double k2);
};

/// A = 0.0283(1 + 1/d - k2), B = (0.0283 - 1.0283 k2)/d,
/// C = (0.0013 k1 - 0.0283 k2)/d.
std::array<double, 3> cpams_coefficients(int d, double k1, double k2);

/// Root-finding residual |sum x^3 + A sum x^2 + B sum x + C|, minimized
/// toward zero on [0,1]^n.
double cpams_objective(std::span<const double> x, const CpamsParams& params);

/// Hybrid bifurcation control term N(I) = k1*F(I) + k2*(I + I^3).
double cpams_control_term(double infected, double f_value, double k1, double k2);

/// The residual packaged as a minimization Problem on [0,1]^n (n = 1 by
/// default: a single infection fraction).
Problem cpams_problem(const CpamsParams& params, int n = 1);

/// Protocol sizes used by the CPAMS experiment: 10 agents, 300 iterations.
inline constexpr int kCpamsAgents = 10;
inline constexpr int kCpamsIterations = 300;

}  // namespace leo::apps

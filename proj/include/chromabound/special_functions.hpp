#pragma once

#include <span>
#include <vector>

#include "chromabound/maximize.hpp"

namespace chromabound {

struct ExpTerm {
  double coefficient = 0.0;
  double exponent = 0.0;
};

/// Finite sum  sum_i c_i * t^{e_i}  with strictly increasing, nonnegative
/// exponents. Holds truncated theta numerators and geometric denominators.
class ExponentialSum {
 public:
  ExponentialSum() = default;
  explicit ExponentialSum(std::vector<ExpTerm> terms);

  /// theta(t^gamma; l) = sum_{j=1}^{l} t^{gamma * C(j,2)}.
  static ExponentialSum truncated_theta(double gamma, int l);
  /// 1 + t + ... + t^{l-1}.
  static ExponentialSum geometric(int l);

  double operator()(double t) const;
  std::span<const ExpTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<ExpTerm> terms_;
};

/// Partial sum of a convergent series together with a rigorous upper bound on
/// the neglected tail.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms = 0;
};

struct GammaChiResult {
  double value = 0.0;      // sqrt(pi/2) * inner_max
  double u_star = 0.0;     // root of e^u = 1 + 2u
  double inner_max = 0.0;  // max_u (1 - e^{-u}) / sqrt(u)
  double stationarity_residual = 0.0;
};

// Throws std::domain_error when t is outside [0, 1], gamma outside (0, 1] or l < 1.
double theta_truncated(double t, double gamma, int l);

/// Partial theta function theta(t^gamma) = sum_{j>=1} t^{gamma*C(j,2)} for t in [0, 1).
/// Summation stops once the next term is below 1e-18 of the partial sum and the
/// geometric tail bound is below tail_tol times the partial sum.
SeriesValue theta_full(double t, double gamma = 1.0, double tail_tol = 1e-15);

/// Jacobi theta functions at z = 0 for real nome q in [0, 1); kind is 2, 3 or 4.
double jacobi_theta(int kind, double q);

/// |theta(e^{-pi x}) - e^{pi x / 8} / sqrt(2x) * theta_4(e^{-2 pi / x})|.
double functional_equation_residual(double x);

/// Solves e^u = 1 + 2u, the stationarity condition of (1 - e^{-u}) / sqrt(u),
/// by bisection followed by safeguarded Newton steps.
GammaChiResult gamma_chi(double tol = 1e-15);

/// Global maximum of (1 - t) * theta(t^gamma) over (0, 1).
Maximum one_minus_t_theta_max(double gamma, double tol = 1e-12);

}  // namespace chromabound

#pragma once

#include <string>
#include <vector>

#include "chromabound/bigint.hpp"

namespace chromabound {

/// Theta series of an even integral lattice, theta(t) = sum_j N_j t^{2j},
/// where N_j counts vectors of squared norm 2j. Coefficients are exact; a
/// double copy is kept for evaluation. Immutable after construction.
class ThetaSeries {
 public:
  ThetaSeries(std::string label, int dim, std::vector<BigInt> coeffs, double growth_exponent);

  const std::string& label() const { return label_; }
  int dim() const { return dim_; }
  /// Truncation index: coefficients N_0 .. N_K are known.
  int K() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  double growth_exponent() const { return growth_exponent_; }
  /// A in the envelope N_j <= A j^g: twice the largest observed N_j / j^g.
  double growth_constant() const { return growth_constant_; }

  /// Truncated sum over j <= K.
  double evaluate(double t) const;
  /// Upper bound on sum_{j>K} A j^g t^{2j}; +infinity when the envelope diverges.
  double tail_bound(double t) const;

 private:
  std::string label_;
  int dim_;
  std::vector<BigInt> coeffs_;
  std::vector<double> approx_;
  double growth_exponent_;
  double growth_constant_ = 0.0;
};

struct MuResult {
  double t_star = 0.0;
  double mu = 0.0;
  std::string lattice_label;
  int dim = 0;
  // Truncation error bound on theta at t_star (0 for closed-form thetas).
  double tail_bound = 0.0;
};

enum class DoubleCapVerdict { improvement, no_improvement };

/// sigma_p(n) = sum of d^p over divisors d of n.
BigInt divisor_power_sum(int n, int power);

/// tau(1..K) from the q-expansion of q * prod (1 - q^n)^24; index 0 holds 0.
std::vector<BigInt> ramanujan_tau(int K);

/// theta of D_n: (theta_3(t)^n + theta_4(t)^n) / 2.
double dn_theta(int n, double t);

/// N_j = 240 sigma_3(j).
ThetaSeries e8_series(int K = 512);

/// N_j = 65520/691 (sigma_11(j) - tau(j)). Throws std::logic_error if the
/// division by 691 is not exact.
ThetaSeries leech_series(int K = 512);

/// mu = (max_t theta(t) (1-t)^d)^{-1/d}. The search is restricted to the range
/// of t where the tail bound is below tol times the truncated sum; a maximizer
/// on the edge of that range throws std::runtime_error asking for a larger K.
MuResult mu_lattice(const ThetaSeries& series, double tol = 1e-12);

/// mu of D_n from the closed form.
MuResult mu_dn(int n, double tol = 1e-12);

/// (max_t theta_3(t)(1-t))^{-1}, the n -> infinity limit of mu over D_n.
MuResult mu_z(double tol = 1e-12);

/// Improvement means mu < sqrt(3)/2 strictly.
DoubleCapVerdict double_cap_compare(double mu);

}  // namespace chromabound

#pragma once

#include <vector>

#include "chromabound/maximize.hpp"

namespace chromabound {

/// m forbidden distances {1, sqrt 2, ..., sqrt m}; colour classes may not
/// contain k+1 points pairwise at forbidden distances.
struct BoundQuery {
  int m = 1;
  int k = 1;
};

struct BoundResult {
  int m = 0;
  int k = 0;
  double gamma = 0.0;  // k / (m + 1)
  int l_star = 0;      // numerator and denominator both have l_star terms
  double t_star = 0.0;
  double value = 0.0;
  // Set when k > m: the method gives nothing better than the trivial bound.
  bool trivial_regime = false;
};

struct BestL {
  int l_star = 0;
  double t_star = 0.0;
  double value = 0.0;
};

/// theta(t^gamma; l) / (1 + t + ... + t^{l-1}); the t -> 0 limit 1 is returned at t = 0.
double F_ratio(double t, double gamma, int l);

/// max over 0 < t < 1 of F_ratio(t, gamma, l).
Maximum maximize_over_t(double gamma, int l, double tol = 1e-12);

/// Scans l = 1 .. ceil(2/gamma) + 2 and keeps the best l; values within a
/// relative 1e-12 of each other count as ties and resolve to the smaller l.
BestL best_l(double gamma, double tol = 1e-12);

BoundResult chromatic_lower_bound(BoundQuery q, double tol = 1e-12);

/// Gamma_chi * sqrt((m + 1) / k).
double asymptotic_lower_bound(BoundQuery q);

/// 2 (sqrt(m) + 1), the base of the known exponential upper bound for A_m.
double kupavskii_upper_base(int m);

/// Every cell 1 <= k <= min(m, k_max), 1 <= m <= m_max, ordered by m then k.
std::vector<BoundResult> bound_table(int m_max, int k_max, double tol = 1e-12,
                                     unsigned threads = 1);

}  // namespace chromabound

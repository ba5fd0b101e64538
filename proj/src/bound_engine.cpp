#include "chromabound/bound_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chromabound/parallel.hpp"
#include "chromabound/special_functions.hpp"

namespace chromabound {

namespace {

constexpr double kTieRelTol = 1e-12;

// The ratio with gamma >= 1 is still well defined; it just never exceeds 1.
// Domain checks for the public entry points happen before this is called.
double ratio_unchecked(double t, double gamma, int l) {
  if (t == 0.0) return 1.0;
  const double r = std::pow(t, gamma);
  // term = r^{C(j,2)} advances by step = r^{j-1} -> r^j.
  double num = 0.0, term = 1.0, step = 1.0;
  double den = 0.0, power = 1.0;
  for (int j = 1; j <= l; ++j) {
    num += term;
    den += power;
    step *= r;
    term *= step;
    power *= t;
  }
  return num / den;
}

Maximum maximize_unchecked(double gamma, int l, double tol) {
  if (l == 1) return {0.5, 1.0};
  MaximizeOptions opts;
  opts.tol = tol;
  return grid_golden_maximize([&](double t) { return ratio_unchecked(t, gamma, l); }, opts);
}

BestL best_l_unchecked(double gamma, double tol) {
  const int l_max = static_cast<int>(std::ceil(2.0 / gamma)) + 2;
  BestL best{1, 0.5, 1.0};
  for (int l = 2; l <= l_max; ++l) {
    const Maximum m = maximize_unchecked(gamma, l, tol);
    if (m.value > best.value * (1.0 + kTieRelTol)) best = {l, m.argmax, m.value};
  }
  return best;
}

void check_open_gamma(double gamma, const char* who) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::domain_error(std::string(who) + ": gamma must lie in (0, 1)");
  }
}

}  // namespace

double F_ratio(double t, double gamma, int l) {
  if (l < 1) throw std::domain_error("F_ratio: l must be >= 1");
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("F_ratio: t must lie in [0, 1]");
  if (!(gamma > 0.0)) throw std::domain_error("F_ratio: gamma must be positive");
  return ratio_unchecked(t, gamma, l);
}

Maximum maximize_over_t(double gamma, int l, double tol) {
  check_open_gamma(gamma, "maximize_over_t");
  if (l < 1) throw std::domain_error("maximize_over_t: l must be >= 1");
  return maximize_unchecked(gamma, l, tol);
}

BestL best_l(double gamma, double tol) {
  check_open_gamma(gamma, "best_l");
  return best_l_unchecked(gamma, tol);
}

BoundResult chromatic_lower_bound(BoundQuery q, double tol) {
  if (q.m < 1 || q.k < 1) throw std::domain_error("chromatic_lower_bound: m and k must be >= 1");
  BoundResult r;
  r.m = q.m;
  r.k = q.k;
  r.gamma = static_cast<double>(q.k) / static_cast<double>(q.m + 1);
  r.trivial_regime = q.k > q.m;
  const BestL b = best_l_unchecked(r.gamma, tol);
  r.l_star = b.l_star;
  r.t_star = b.t_star;
  r.value = b.value;
  return r;
}

double asymptotic_lower_bound(BoundQuery q) {
  if (q.m < 1 || q.k < 1) throw std::domain_error("asymptotic_lower_bound: m and k must be >= 1");
  return gamma_chi().value * std::sqrt(static_cast<double>(q.m + 1) / q.k);
}

double kupavskii_upper_base(int m) {
  if (m < 1) throw std::domain_error("kupavskii_upper_base: m must be >= 1");
  return 2.0 * (std::sqrt(static_cast<double>(m)) + 1.0);
}

std::vector<BoundResult> bound_table(int m_max, int k_max, double tol, unsigned threads) {
  if (m_max < 1 || k_max < 1) throw std::domain_error("bound_table: m_max and k_max must be >= 1");
  std::vector<BoundQuery> cells;
  for (int m = 1; m <= m_max; ++m) {
    for (int k = 1; k <= std::min(m, k_max); ++k) cells.push_back({m, k});
  }
  std::vector<BoundResult> out(cells.size());
  parallel_for(cells.size(), threads,
               [&](std::size_t i) { out[i] = chromatic_lower_bound(cells[i], tol); });
  return out;
}

}  // namespace chromabound

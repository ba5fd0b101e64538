#include "chromabound/lattice_theta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chromabound/maximize.hpp"
#include "chromabound/special_functions.hpp"

namespace chromabound {

namespace {

constexpr double kGrowthSlack = 0.5;

std::vector<BigInt> multiply_truncated(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                       std::size_t len) {
  std::vector<BigInt> out(len);
  for (std::size_t i = 0; i < std::min(a.size(), len); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// log((theta_3^n + theta_4^n) / 2), stable for large n.
double dn_log_theta(int n, double t) {
  const double t3 = jacobi_theta(3, t);
  const double t4 = jacobi_theta(4, t);
  return n * std::log(t3) + std::log1p(std::pow(t4 / t3, n)) - std::numbers::ln2;
}

MuResult maximize_log_objective(const std::function<double(double)>& log_objective, int dim,
                                double hi, double tol) {
  MaximizeOptions opts;
  opts.hi = hi;
  opts.tol = std::max(tol, 1e-15);
  const Maximum best = grid_golden_maximize(log_objective, opts);
  MuResult r;
  r.t_star = best.argmax;
  r.dim = dim;
  r.mu = std::exp(-best.value / dim);
  return r;
}

}  // namespace

ThetaSeries::ThetaSeries(std::string label, int dim, std::vector<BigInt> coeffs,
                         double growth_exponent)
    : label_(std::move(label)), dim_(dim), coeffs_(std::move(coeffs)),
      growth_exponent_(growth_exponent) {
  if (dim_ < 1) throw std::invalid_argument("ThetaSeries: dim must be positive");
  if (coeffs_.empty() || coeffs_[0] != 1) {
    throw std::invalid_argument("ThetaSeries: N_0 must equal 1");
  }
  approx_.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] < 0) throw std::invalid_argument("ThetaSeries: negative coefficient");
    approx_.push_back(coeffs_[j].convert_to<double>());
    if (j > 0) {
      growth_constant_ = std::max(
          growth_constant_, approx_[j] / std::pow(static_cast<double>(j), growth_exponent_));
    }
  }
  growth_constant_ *= 2.0;
}

double ThetaSeries::evaluate(double t) const {
  const double u = t * t;
  double sum = 0.0;
  for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) sum = sum * u + *it;
  return sum;
}

double ThetaSeries::tail_bound(double t) const {
  if (t == 0.0 || growth_constant_ == 0.0) return 0.0;
  const double u = t * t;
  const double k1 = K() + 1.0;
  // Term ratio of A j^g u^j is at most ((K+2)/(K+1))^g u for j > K.
  const double ratio = std::pow((k1 + 1.0) / k1, growth_exponent_) * u;
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  const double log_first = std::log(growth_constant_) + growth_exponent_ * std::log(k1) +
                           k1 * std::log(u);
  return std::exp(log_first) / (1.0 - ratio);
}

BigInt divisor_power_sum(int n, int power) {
  if (n < 1) throw std::domain_error("divisor_power_sum: n must be positive");
  BigInt sum = 0;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(power));
    if (d != n / d) sum += boost::multiprecision::pow(BigInt(n / d), static_cast<unsigned>(power));
  }
  return sum;
}

std::vector<BigInt> ramanujan_tau(int K) {
  if (K < 1) throw std::domain_error("ramanujan_tau: K must be >= 1");
  const auto len = static_cast<std::size_t>(K);
  // Euler's pentagonal theorem: prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k in Z.
  std::vector<BigInt> euler(len);
  euler[0] = 1;
  for (long k = 1;; ++k) {
    const long a = k * (3 * k - 1) / 2;
    const long b = k * (3 * k + 1) / 2;
    if (a >= K) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    euler[static_cast<std::size_t>(a)] += sign;
    if (b < K) euler[static_cast<std::size_t>(b)] += sign;
  }
  const auto e2 = multiply_truncated(euler, euler, len);
  const auto e4 = multiply_truncated(e2, e2, len);
  const auto e8 = multiply_truncated(e4, e4, len);
  const auto e16 = multiply_truncated(e8, e8, len);
  const auto e24 = multiply_truncated(e16, e8, len);
  std::vector<BigInt> tau(len + 1);
  for (std::size_t j = 1; j <= len; ++j) tau[j] = e24[j - 1];
  return tau;
}

double dn_theta(int n, double t) {
  if (n < 1) throw std::domain_error("dn_theta: n must be positive");
  if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("dn_theta: t must lie in [0, 1)");
  return 0.5 * (std::pow(jacobi_theta(3, t), n) + std::pow(jacobi_theta(4, t), n));
}

ThetaSeries e8_series(int K) {
  if (K < 1) throw std::domain_error("e8_series: K must be >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(K) + 1);
  c[0] = 1;
  for (int j = 1; j <= K; ++j) c[static_cast<std::size_t>(j)] = 240 * divisor_power_sum(j, 3);
  return ThetaSeries("e8", 8, std::move(c), 3.0 + kGrowthSlack);
}

ThetaSeries leech_series(int K) {
  if (K < 1) throw std::domain_error("leech_series: K must be >= 1");
  const auto tau = ramanujan_tau(K);
  std::vector<BigInt> c(static_cast<std::size_t>(K) + 1);
  c[0] = 1;
  for (int j = 1; j <= K; ++j) {
    const BigInt numerator = 65520 * (divisor_power_sum(j, 11) - tau[static_cast<std::size_t>(j)]);
    if (numerator % 691 != 0) {
      throw std::logic_error("leech_series: inexact division by 691 at j = " + std::to_string(j));
    }
    c[static_cast<std::size_t>(j)] = numerator / 691;
  }
  return ThetaSeries("leech", 24, std::move(c), 11.0 + kGrowthSlack);
}

MuResult mu_lattice(const ThetaSeries& series, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("mu_lattice: tol must be positive");
  auto certified = [&](double t) { return series.tail_bound(t) <= tol * series.evaluate(t); };

  // Largest t with a certified tail; the certificate weakens monotonically in t.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (certified(mid) ? lo : hi) = mid;
  }
  const double t_cert = lo;
  if (t_cert <= 0.0) throw std::runtime_error("mu_lattice: no certified range, increase K");

  const int d = series.dim();
  auto objective = [&](double t) { return std::log(series.evaluate(t)) + d * std::log1p(-t); };
  // Still climbing at the edge: the peak lies past what K coefficients can certify.
  if (objective(t_cert) > objective(t_cert * (1.0 - 1e-3))) {
    throw std::runtime_error("mu_lattice: objective still increasing at certified limit t = " +
                             std::to_string(t_cert) + ", increase K");
  }
  MuResult r = maximize_log_objective(objective, d, t_cert, tol);
  if (r.t_star < t_cert * (2.0 / 4096.0)) {
    throw std::runtime_error("mu_lattice: no interior maximizer below certified limit t = " +
                             std::to_string(t_cert) + ", increase K");
  }
  if (r.t_star > t_cert * (1.0 - 2.0 / 4096.0)) {
    throw std::runtime_error("mu_lattice: maximizer at edge of certified range (t = " +
                             std::to_string(r.t_star) + "), increase K");
  }
  r.lattice_label = series.label();
  r.tail_bound = series.tail_bound(r.t_star);
  return r;
}

MuResult mu_dn(int n, double tol) {
  if (n < 1) throw std::domain_error("mu_dn: n must be positive");
  MuResult r = maximize_log_objective(
      [n](double t) { return dn_log_theta(n, t) + n * std::log1p(-t); }, n, 1.0, tol);
  r.lattice_label = "dn:" + std::to_string(n);
  return r;
}

MuResult mu_z(double tol) {
  MuResult r = maximize_log_objective(
      [](double t) { return std::log(jacobi_theta(3, t)) + std::log1p(-t); }, 1, 1.0, tol);
  r.lattice_label = "zn";
  return r;
}

DoubleCapVerdict double_cap_compare(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("double_cap_compare: mu must lie in (0, 1)");
  return mu < std::sqrt(3.0) / 2.0 ? DoubleCapVerdict::improvement
                                   : DoubleCapVerdict::no_improvement;
}

}  // namespace chromabound

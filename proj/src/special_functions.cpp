#include "chromabound/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chromabound {

namespace {

constexpr double kRelativeStop = 1e-18;
constexpr int kMaxSeriesTerms = 10'000'000;

void check_gamma(double gamma, const char* who) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::domain_error(std::string(who) + ": gamma must lie in (0, 1]");
  }
}

double choose2(double j) { return 0.5 * j * (j - 1.0); }

}  // namespace

ExponentialSum::ExponentialSum(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!std::isfinite(terms_[i].coefficient) || !std::isfinite(terms_[i].exponent)) {
      throw std::invalid_argument("ExponentialSum: non-finite term");
    }
    if (terms_[i].exponent < 0.0) {
      throw std::invalid_argument("ExponentialSum: negative exponent");
    }
    if (i > 0 && !(terms_[i].exponent > terms_[i - 1].exponent)) {
      throw std::invalid_argument("ExponentialSum: exponents must be strictly increasing");
    }
  }
}

ExponentialSum ExponentialSum::truncated_theta(double gamma, int l) {
  check_gamma(gamma, "truncated_theta");
  if (l < 1) throw std::domain_error("truncated_theta: l must be >= 1");
  std::vector<ExpTerm> terms;
  terms.reserve(static_cast<std::size_t>(l));
  for (int j = 1; j <= l; ++j) terms.push_back({1.0, gamma * choose2(j)});
  return ExponentialSum(std::move(terms));
}

ExponentialSum ExponentialSum::geometric(int l) {
  if (l < 1) throw std::domain_error("geometric: l must be >= 1");
  std::vector<ExpTerm> terms;
  terms.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) terms.push_back({1.0, static_cast<double>(i)});
  return ExponentialSum(std::move(terms));
}

double ExponentialSum::operator()(double t) const {
  double sum = 0.0;
  for (const ExpTerm& term : terms_) sum += term.coefficient * std::pow(t, term.exponent);
  return sum;
}

double theta_truncated(double t, double gamma, int l) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("theta_truncated: t must lie in [0, 1]");
  return ExponentialSum::truncated_theta(gamma, l)(t);
}

SeriesValue theta_full(double t, double gamma, double tail_tol) {
  if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("theta_full: t must lie in [0, 1)");
  check_gamma(gamma, "theta_full");
  if (!(tail_tol > 0.0)) throw std::domain_error("theta_full: tail_tol must be positive");

  SeriesValue out;
  // Successive terms T_j = t^{gamma C(j,2)} have ratio T_{j+1}/T_j = t^{gamma j},
  // which decreases in j, so the tail after T_j is dominated by a geometric series.
  for (int j = 1; j < kMaxSeriesTerms; ++j) {
    out.value += std::pow(t, gamma * choose2(j));
    out.terms = j;
    const double next = std::pow(t, gamma * choose2(j + 1));
    const double ratio = std::pow(t, gamma * static_cast<double>(j + 1));
    const double tail = next / (1.0 - ratio);
    if (next == 0.0 || (next < kRelativeStop * out.value && tail < tail_tol * out.value)) {
      out.tail_bound = tail;
      return out;
    }
  }
  throw std::runtime_error("theta_full: series did not converge");
}

double jacobi_theta(int kind, double q) {
  if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("jacobi_theta: q must lie in [0, 1)");
  if (kind < 2 || kind > 4) throw std::domain_error("jacobi_theta: kind must be 2, 3 or 4");

  double sum = kind == 2 ? 0.0 : 1.0;
  double scale = sum;
  for (int n = kind == 2 ? 0 : 1; n < kMaxSeriesTerms; ++n) {
    const double e = kind == 2 ? (n + 0.5) * (n + 0.5) : static_cast<double>(n) * n;
    const double term = 2.0 * std::pow(q, e);
    sum += (kind == 4 && n % 2 == 1) ? -term : term;
    scale += term;
    if (term == 0.0 || term < kRelativeStop * scale) return sum;
  }
  throw std::runtime_error("jacobi_theta: series did not converge");
}

double functional_equation_residual(double x) {
  if (!(x > 0.0)) throw std::domain_error("functional_equation_residual: x must be positive");
  const double pi = std::numbers::pi;
  const double lhs = theta_full(std::exp(-pi * x), 1.0, 1e-16).value;
  const double rhs =
      std::exp(pi * x / 8.0) / std::sqrt(2.0 * x) * jacobi_theta(4, std::exp(-2.0 * pi / x));
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
    throw std::domain_error("functional_equation_residual: x outside evaluable range");
  }
  return std::abs(lhs - rhs);
}

GammaChiResult gamma_chi(double tol) {
  if (!(tol > 0.0)) throw std::domain_error("gamma_chi: tol must be positive");
  // g(u) = e^u - 1 - 2u vanishes at 0 and at the interior stationary point;
  // g < 0 strictly between them, g > 0 beyond.
  auto g = [](double u) { return std::expm1(u) - 2.0 * u; };
  double lo = 1e-3, hi = 10.0;
  while (hi - lo > 1e-2) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double gu = g(u);
    (gu < 0.0 ? lo : hi) = u;
    double next = u - gu / (std::exp(u) - 2.0);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - u);
    u = next;
    if (step < tol * std::max(1.0, u)) break;
  }

  GammaChiResult out;
  out.u_star = u;
  out.inner_max = -std::expm1(-u) / std::sqrt(u);
  out.value = std::sqrt(std::numbers::pi / 2.0) * out.inner_max;
  out.stationarity_residual = std::abs(std::exp(u) - 1.0 - 2.0 * u);
  return out;
}

Maximum one_minus_t_theta_max(double gamma, double tol) {
  check_gamma(gamma, "one_minus_t_theta_max");
  MaximizeOptions opts;
  opts.tol = tol;
  return grid_golden_maximize(
      [gamma](double t) { return (1.0 - t) * theta_full(t, gamma).value; }, opts);
}

}  // namespace chromabound

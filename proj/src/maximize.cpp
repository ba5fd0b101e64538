#include "chromabound/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace chromabound {

namespace {

double finite_or_floor(double v) {
  return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity();
}

}  // namespace

Maximum golden_section_maximize(const std::function<double(double)>& f, double a,
                                double b, double tol) {
  if (!(a < b)) throw std::invalid_argument("golden_section_maximize: empty bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = finite_or_floor(f(c));
  double fd = finite_or_floor(f(d));
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = finite_or_floor(f(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = finite_or_floor(f(d));
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = finite_or_floor(f(mid));
  Maximum best{mid, fm};
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

Maximum grid_golden_maximize(const std::function<double(double)>& f,
                             const MaximizeOptions& opts) {
  if (!(opts.lo < opts.hi)) throw std::invalid_argument("grid_golden_maximize: lo >= hi");
  if (opts.grid_points < 3) throw std::invalid_argument("grid_golden_maximize: grid too coarse");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("grid_golden_maximize: tol must be positive");

  const std::size_t n = opts.grid_points;
  const double step = (opts.hi - opts.lo) / static_cast<double>(n + 1);
  std::vector<double> ts(n), vs(n);
  for (std::size_t i = 0; i < n; ++i) {
    ts[i] = opts.lo + step * static_cast<double>(i + 1);
    vs[i] = finite_or_floor(f(ts[i]));
  }

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(vs[i])) continue;
    const bool left_ok = i == 0 || vs[i] >= vs[i - 1];
    const bool right_ok = i + 1 == n || vs[i] > vs[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  if (peaks.empty()) {
    // Flat or non-finite everywhere: fall back to the best grid point.
    const auto it = std::max_element(vs.begin(), vs.end());
    const auto i = static_cast<std::size_t>(it - vs.begin());
    return {ts[i], vs[i]};
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t x, std::size_t y) { return vs[x] > vs[y]; });
  if (peaks.size() > static_cast<std::size_t>(std::max(opts.restarts, 1))) {
    peaks.resize(static_cast<std::size_t>(std::max(opts.restarts, 1)));
  }

  Maximum best{ts[peaks.front()], vs[peaks.front()]};
  for (const std::size_t i : peaks) {
    const double a = i == 0 ? opts.lo : ts[i - 1];
    const double b = i + 1 == n ? opts.hi : ts[i + 1];
    const Maximum refined = golden_section_maximize(f, a, b, opts.tol);
    if (refined.value > best.value) best = refined;
  }
  return best;
}

}  // namespace chromabound

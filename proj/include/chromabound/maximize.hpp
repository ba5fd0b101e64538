#pragma once

#include <cstddef>
#include <functional>

namespace chromabound {

struct MaximizeOptions {
  double lo = 0.0;
  double hi = 1.0;
  // Interior points of a uniform grid on (lo, hi); endpoints are never evaluated.
  std::size_t grid_points = 4096;
  // Number of distinct local grid maxima refined by golden-section search.
  int restarts = 3;
  // Width of the final golden-section bracket.
  double tol = 1e-12;
};

struct Maximum {
  double argmax = 0.0;
  double value = 0.0;
};

/// Global maximum of a scalar function on an open interval: a uniform grid
/// scan locates candidate peaks, each of which is polished by golden-section
/// search inside the bracket formed by its grid neighbours. Non-finite
/// function values are treated as -infinity.
Maximum grid_golden_maximize(const std::function<double(double)>& f,
                             const MaximizeOptions& opts = {});

/// Golden-section maximization of a unimodal function on [a, b].
Maximum golden_section_maximize(const std::function<double(double)>& f, double a,
                                double b, double tol);

}  // namespace chromabound

#pragma once
// Slow, obviously-correct reference implementations. None of these call into
// the library under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

// sum_{j=1}^{count} t^{gamma * C(j,2)} by plain pow, long double accumulation.
inline double theta_sum(double t, double gamma, int count) {
  long double s = 0;
  for (int j = 1; j <= count; ++j) {
    s += std::pow(static_cast<long double>(t), static_cast<long double>(gamma) * j * (j - 1) / 2.0L);
  }
  return static_cast<double>(s);
}

inline double ratio(double t, double gamma, int l) {
  long double den = 0;
  for (int j = 0; j < l; ++j) den += std::pow(static_cast<long double>(t), j);
  return static_cast<double>(theta_sum(t, gamma, l) / den);
}

// Dense scan followed by ternary refinement around the best grid point.
inline double scan_max(const std::function<double(double)>& f, double lo, double hi, int n = 20000) {
  int best = 1;
  double best_v = -INFINITY;
  const double h = (hi - lo) / n;
  for (int i = 1; i < n; ++i) {
    const double v = f(lo + h * i);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  double a = lo + h * (best - 1), b = lo + h * (best + 1);
  for (int it = 0; it < 200; ++it) {
    const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
    if (f(m1) < f(m2)) a = m1; else b = m2;
  }
  return std::max(best_v, f((a + b) / 2));
}

inline double best_ratio(double gamma, int l_max) {
  double best = 1.0;
  for (int l = 2; l <= l_max; ++l) {
    best = std::max(best, scan_max([&](double t) { return ratio(t, gamma, l); }, 0.0, 1.0, 4000));
  }
  return best;
}

inline double gamma_chi() {
  const double inner = scan_max([](double u) { return -std::expm1(-u) / std::sqrt(u); }, 0.0, 5.0);
  return std::sqrt(std::acos(-1.0) / 2) * inner;
}

inline std::int64_t sigma(std::int64_t n, int power) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      std::int64_t x = 1;
      for (int i = 0; i < power; ++i) x *= d;
      s += x;
    }
  }
  return s;
}

// Coefficients of q prod_{n>=1} (1-q^n)^24 by repeated multiplication by (1 - q^n).
inline std::vector<std::int64_t> tau(int K) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(K), 0);
  c[0] = 1;
  for (int n = 1; n < K; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = K - 1; i >= n; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - n)];
    }
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(K) + 1, 0);
  for (int j = 1; j <= K; ++j) out[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)];
  return out;
}

// Visits every vector in {lo..hi}^n.
inline void for_each_vector(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(n), lo);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == hi) v[i++] = lo;
    if (i == v.size()) return;
    ++v[i];
  }
}

// Number of E8 vectors of squared norm `norm` (D8 together with D8 + (1/2,...,1/2)),
// enumerated in doubled coordinates.
inline std::int64_t e8_shell(int norm) {
  std::int64_t count = 0;
  const int r = static_cast<int>(std::ceil(std::sqrt(norm)));
  for_each_vector(8, -r, r, [&](const std::vector<int>& v) {
    int s = 0, sq = 0;
    for (int x : v) {
      s += x;
      sq += x * x;
    }
    if (s % 2 == 0 && sq == norm) ++count;
  });
  for_each_vector(8, -r - 1, r, [&](const std::vector<int>& v) {
    // doubled coordinate 2x + 1 is odd
    int s = 0, sq = 0;
    for (int x : v) {
      s += 2 * x + 1;
      sq += (2 * x + 1) * (2 * x + 1);
    }
    if (s % 4 == 0 && sq == 4 * norm) ++count;
  });
  return count;
}

inline double dn_theta(int n, double t) {
  int r = 1;
  while (std::pow(t, (r + 1.0) * (r + 1.0)) > 1e-18) ++r;
  long double s = 0;
  for_each_vector(n, -r, r, [&](const std::vector<int>& v) {
    int sum = 0, sq = 0;
    for (int x : v) {
      sum += x;
      sq += x * x;
    }
    if (sum % 2 == 0) s += std::pow(static_cast<long double>(t), sq);
  });
  return static_cast<double>(s);
}

inline std::int64_t count_box(int n, int l, int d) {
  std::int64_t c = 0;
  for_each_vector(n, 0, l, [&](const std::vector<int>& v) {
    if (std::accumulate(v.begin(), v.end(), 0) <= d) ++c;
  });
  return c;
}

inline std::vector<bool> sieve(int limit) {
  std::vector<bool> prime(static_cast<std::size_t>(limit) + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (int i = 2; i * i <= limit; ++i) {
    if (prime[static_cast<std::size_t>(i)]) {
      for (int j = i * i; j <= limit; j += i) prime[static_cast<std::size_t>(j)] = false;
    }
  }
  return prime;
}

// sum over non-k-cycle permutations of sign * prod_i [x_i == x_{sigma(i)}].
inline long long h_k(const std::vector<int>& xs) {
  const int k = static_cast<int>(xs.size());
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  long long total = 0;
  do {
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    int cycles = 0;
    for (int i = 0; i < k; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++cycles;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
      }
    }
    if (cycles == 1) continue;
    bool fixed = true;
    for (int i = 0; i < k; ++i) fixed = fixed && xs[static_cast<std::size_t>(i)] == xs[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
    if (fixed) total += (k - cycles) % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// max over all orderings y of the multiset of coordinates of sum (x_i - y_i)^2 / 2,
// with x the sorted arrangement.
inline std::int64_t dmax(const std::vector<int>& a) {
  std::vector<int> x;
  for (std::size_t v = 0; v < a.size(); ++v) x.insert(x.end(), static_cast<std::size_t>(a[v]), static_cast<int>(v));
  std::vector<int> y = x;
  std::int64_t best = 0;
  do {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    best = std::max(best, s / 2);
  } while (std::next_permutation(y.begin(), y.end()));
  return best;
}

}  // namespace oracle

#include "chromabound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chromabound/bound_engine.hpp"
#include "chromabound/lattice_combinatorics.hpp"
#include "chromabound/lattice_theta.hpp"
#include "chromabound/parallel.hpp"
#include "chromabound/special_functions.hpp"
#include "chromabound/tensor_oracle.hpp"

namespace chromabound {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theta", "bounds", "combinatorics", "tensor"};
  return names;
}

namespace {

// Collects the first counterexample of a check.
class Check {
 public:
  explicit Check(std::string name) : result_{std::move(name), true, ""} {}

  template <class... Args>
  void expect(bool ok, const Args&... args) {
    if (ok || !result_.passed) return;
    result_.passed = false;
    std::ostringstream os;
    os.precision(17);
    (os << ... << args);
    result_.detail = os.str();
  }
  CheckResult done(std::string summary = "") {
    if (result_.passed) result_.detail = std::move(summary);
    return result_;
  }

 private:
  CheckResult result_;
};

std::vector<double> gamma_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 19; ++i) out.push_back(0.05 * i);
  return out;
}

// Direct sum of t^{|v|^2} over D_n inside a box big enough for the tail to vanish.
double dn_theta_by_enumeration(int n, double t) {
  int radius = 1;
  while (std::pow(t, (radius + 1.0) * (radius + 1.0)) > 1e-18) ++radius;
  std::vector<int> v(static_cast<std::size_t>(n), -radius);
  double sum = 0.0;
  while (true) {
    int s = 0, sq = 0;
    for (const int x : v) {
      s += x;
      sq += x * x;
    }
    if (s % 2 == 0) sum += std::pow(t, sq);
    std::size_t i = 0;
    while (i < v.size() && v[i] == radius) v[i++] = -radius;
    if (i == v.size()) break;
    ++v[i];
  }
  return sum;
}

SuiteReport theta_suite() {
  SuiteReport rep{"theta", {}};
  {
    Check c("functional equation residual < 1e-10 on 50 log-spaced x in [0.1, 10]");
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double x = 0.1 * std::pow(100.0, i / 49.0);
      const double r = functional_equation_residual(x);
      worst = std::max(worst, r);
      c.expect(r < 1e-10, "x = ", x, " residual = ", r);
    }
    rep.checks.push_back(c.done("max residual " + std::to_string(worst)));
  }
  {
    Check c("truncated theta monotone in l and below the full series");
    for (const double gamma : {0.25, 0.5, 1.0}) {
      for (int ti = 1; ti <= 9; ++ti) {
        const double t = ti / 10.0;
        const double full = theta_full(t, gamma).value;
        double prev = 0.0;
        for (int l = 1; l <= 30; ++l) {
          const double v = theta_truncated(t, gamma, l);
          c.expect(v >= prev, "gamma=", gamma, " t=", t, " l=", l);
          c.expect(v <= full * (1 + 1e-15), "exceeds full at gamma=", gamma, " t=", t, " l=", l);
          prev = v;
        }
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("theta_3 >= theta_4 and 1-2q <= theta_4 <= 1-2q+2q^4");
    for (int i = 0; i < 100; ++i) {
      const double q = i / 101.0;
      const double t3 = jacobi_theta(3, q), t4 = jacobi_theta(4, q);
      c.expect(t3 >= t4, "q=", q);
      c.expect(1 - 2 * q <= t4 + 1e-15 && t4 <= 1 - 2 * q + 2 * std::pow(q, 4) + 1e-15, "q=", q);
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("Gamma_chi stationarity residual < 1e-10");
    const auto g = gamma_chi();
    c.expect(g.stationarity_residual < 1e-10, "residual ", g.stationarity_residual);
    rep.checks.push_back(c.done("Gamma_chi = " + std::to_string(g.value)));
  }
  {
    Check c("max (1-t) theta(t^gamma) >= Gamma_chi / sqrt(gamma) for 20 gamma");
    const double gchi = gamma_chi().value;
    for (int i = 1; i <= 20; ++i) {
      const double gamma = i / 20.0;
      const double v = one_minus_t_theta_max(gamma).value;
      c.expect(v >= gchi / std::sqrt(gamma), "gamma=", gamma, " value=", v);
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("Leech and E8 coefficients (K=512): integrality and anchors");
    const auto leech = leech_series(512);
    const auto e8 = e8_series(512);
    c.expect(leech.coeffs()[1] == 0 && leech.coeffs()[2] == 196560, "Leech anchors");
    c.expect(e8.coeffs()[1] == 240 && e8.coeffs()[2] == 2160, "E8 anchors");
    for (const auto& n : leech.coeffs()) c.expect(n >= 0, "negative Leech coefficient");
    rep.checks.push_back(c.done());
  }
  {
    Check c("D_n closed form matches lattice enumeration, n <= 4");
    for (int n = 1; n <= 4; ++n) {
      for (const double t : {0.1, 0.3, 0.5}) {
        const double a = dn_theta(n, t), b = dn_theta_by_enumeration(n, t);
        c.expect(std::abs(a - b) < 1e-10, "n=", n, " t=", t, " closed=", a, " direct=", b);
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("mu for Z, E8, Leech lie in (sqrt(3)/2, 1)");
    const double lo = std::sqrt(3.0) / 2;
    for (const auto& r : {mu_z(), mu_lattice(e8_series(512)), mu_lattice(leech_series(512))}) {
      c.expect(r.mu > lo && r.mu < 1.0, r.lattice_label, " mu=", r.mu);
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("mu(D_n) -> mu_Z: gap shrinks along n = 8, 16, 32, 64 within 2^{1/n} mu_Z");
    const double mz = mu_z().mu;
    double prev_gap = 1.0;
    for (const int n : {8, 16, 32, 64}) {
      const double gap = mu_dn(n).mu - mz;
      c.expect(gap >= -1e-12 && gap < prev_gap, "n=", n, " gap=", gap);
      c.expect(gap <= (std::pow(2.0, 1.0 / n) - 1.0) * mz + 1e-9, "n=", n, " gap=", gap);
      prev_gap = gap;
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

SuiteReport bounds_suite(unsigned threads) {
  SuiteReport rep{"bounds", {}};
  const auto grid = gamma_grid();
  std::vector<BestL> best(grid.size());
  std::vector<double> plain_max(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    best[i] = best_l(grid[i]);
    plain_max[i] = one_minus_t_theta_max(grid[i]).value;
  });
  const double gchi = gamma_chi().value;
  {
    Check c("gamma-determinism: equal k/(m+1) give equal values");
    for (int m = 1; m <= 11; ++m) {
      for (int k = 1; k <= m; ++k) {
        for (int f = 2; f * k <= 12 && f * (m + 1) - 1 <= 23; ++f) {
          const auto a = chromatic_lower_bound({m, k});
          const auto b = chromatic_lower_bound({f * (m + 1) - 1, f * k});
          c.expect(std::abs(a.value - b.value) < 1e-9, "(", m, ",", k, ") vs (",
                   f * (m + 1) - 1, ",", f * k, ")");
        }
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("best value >= Gamma_chi / sqrt(gamma), > 1 and >= max (1-t) theta(t^gamma)");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      c.expect(best[i].value >= gchi / std::sqrt(grid[i]), "gamma=", grid[i]);
      c.expect(best[i].value > 1.0, "gamma=", grid[i]);
      c.expect(best[i].value >= plain_max[i] * (1 - 1e-12), "gamma=", grid[i], " best=", best[i].value,
               " (1-t)theta max=", plain_max[i]);
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("l* <= 2m + 1 for gamma = 1/(m+1), m = 1..10");
    for (int m = 1; m <= 10; ++m) {
      const auto r = chromatic_lower_bound({m, 1});
      c.expect(r.l_star <= 2 * m + 1, "m=", m, " l*=", r.l_star);
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("dropping the last term helps once l >= 2/gamma");
    for (const double gamma : grid) {
      const int first = static_cast<int>(std::ceil(2.0 / gamma - 1e-12));
      for (int l = std::max(first, 2); l <= first + 2; ++l) {
        const double t = maximize_over_t(gamma, l).argmax;
        c.expect(F_ratio(t, gamma, l - 1) >= F_ratio(t, gamma, l) * (1 - 1e-15), "gamma=", gamma, " l=", l);
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("lower bound <= 2(sqrt m + 1) for m <= 50");
    std::vector<BoundResult> cells(50);
    parallel_for(cells.size(), threads, [&](std::size_t i) {
      cells[i] = chromatic_lower_bound({static_cast<int>(i) + 1, 1});
    });
    for (const auto& r : cells) {
      c.expect(r.value <= kupavskii_upper_base(r.m), "m=", r.m, " value=", r.value);
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

SuiteReport combinatorics_suite() {
  SuiteReport rep{"combinatorics", {}};
  {
    Check c("count_box matches enumeration for n <= 6, l <= 3, all d");
    for (int n = 1; n <= 6; ++n) {
      for (int l = 0; l <= 3; ++l) {
        std::vector<long long> by_sum(static_cast<std::size_t>(n * l) + 1, 0);
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        while (true) {
          int s = 0;
          for (const int x : v) s += x;
          ++by_sum[static_cast<std::size_t>(s)];
          std::size_t i = 0;
          while (i < v.size() && v[i] == l) v[i++] = 0;
          if (i == v.size()) break;
          ++v[i];
        }
        long long cumulative = 0;
        for (int d = 0; d <= n * l + 1; ++d) {
          if (d <= n * l) cumulative += by_sum[static_cast<std::size_t>(d)];
          c.expect(count_box(n, l, d) == cumulative, "n=", n, " l=", l, " d=", d);
        }
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("complement symmetry and generating-function bound, n <= 10, l <= 4");
    for (int n = 1; n <= 10; ++n) {
      for (int l = 1; l <= 4; ++l) {
        const BigInt whole = boost::multiprecision::pow(BigInt(l + 1), static_cast<unsigned>(n));
        for (int d = 0; d <= n * l; ++d) {
          const BigInt count = count_box(n, l, d);
          const BigInt rest = n * l - d - 1 >= 0 ? count_box(n, l, n * l - d - 1) : BigInt(0);
          c.expect(count + rest == whole, "complement n=", n, " l=", l, " d=", d);
          double best = INFINITY;
          for (int i = 1; i < 1000; ++i) best = std::min(best, gf_upper_bound(n, l, d, i / 1000.0));
          c.expect(count.convert_to<double>() <= best * (1 + 1e-12), "gf n=", n, " l=", l, " d=", d);
        }
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("dmax formula equals brute force on 200 admissible profiles");
    std::mt19937_64 rng(20240601);
    int done = 0;
    while (done < 200) {
      const int l = std::uniform_int_distribution<int>(1, 4)(rng);
      // Draw b non-increasing, then undo the reordering to obtain a.
      std::vector<int> b(static_cast<std::size_t>(l) + 1);
      int cap = std::uniform_int_distribution<int>(1, 4)(rng);
      for (auto& x : b) {
        x = std::uniform_int_distribution<int>(0, cap)(rng);
        cap = x;
      }
      CompositionProfile prof{std::vector<int>(b.size())};
      int top = l, bottom = 0;
      for (int i = 0; i <= l; ++i) {
        const int src = i % 2 == 0 ? top-- : bottom++;
        prof.a[static_cast<std::size_t>(src)] = b[static_cast<std::size_t>(l - i)];
      }
      if (prof.n() == 0 || prof.n() > 9) continue;
      const auto f = dmax_formula(prof);
      const auto g = dmax_bruteforce(prof);
      std::ostringstream os;
      for (const int x : prof.a) os << x << ' ';
      c.expect(f == g, "a = ", os.str(), " formula=", f, " brute=", g);
      ++done;
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("alternating square identity for j <= 200");
    for (int j = 0; j <= 200; ++j) {
      const auto [lhs, rhs] = alternating_square_identity(j);
      c.expect(lhs == rhs, "j=", j);
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("multinomial lemma on 100 random instances; restriction keeps the maximum");
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
      const int n = std::uniform_int_distribution<int>(1, 8)(rng);
      const int l = std::uniform_int_distribution<int>(0, 3)(rng);
      std::vector<double> cs(static_cast<std::size_t>(l) + 1);
      for (auto& x : cs) x = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
      const double t = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
      const auto r = multinomial_lemma_check(n, l, cs, t);
      c.expect(r.lhs_max >= r.rhs * (1 - 1e-12), "n=", n, " l=", l, " t=", t);
      c.expect(std::abs(r.lhs_max - r.unrestricted_max) <= 1e-12 * r.unrestricted_max,
               "restricted max differs, n=", n, " l=", l);
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("next_prime agrees with a sieve below 100000");
    const int limit = 100'100;
    std::vector<bool> composite(limit + 1, false);
    for (int i = 2; i * i <= limit; ++i) {
      if (!composite[static_cast<std::size_t>(i)]) {
        for (int j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
      }
    }
    int next = limit;
    for (int x = limit - 1; x >= 0; --x) {
      if (x + 1 <= limit && x + 1 >= 2 && !composite[static_cast<std::size_t>(x + 1)]) next = x + 1;
      if (x < 100'000) c.expect(next_prime(static_cast<std::uint64_t>(x)) == static_cast<std::uint64_t>(next), "x=", x);
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

SuiteReport tensor_suite() {
  SuiteReport rep{"tensor", {}};
  {
    Check c("H_k takes values {1, 0, (-1)^k (k-1)!} over alphabets of size <= 4, k <= 5");
    for (int k = 2; k <= 5; ++k) {
      for (int alphabet = 1; alphabet <= 4; ++alphabet) {
        std::vector<int> xs(static_cast<std::size_t>(k), 0);
        while (true) {
          std::vector<int> sorted = xs;
          std::sort(sorted.begin(), sorted.end());
          const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
          const long long expected = distinct == k   ? 1
                                     : distinct == 1 ? (k % 2 == 0 ? 1 : -1) * factorial(k - 1)
                                                     : 0;
          const long long h = h_k_eval(std::span<const int>(xs));
          c.expect(h == expected, "k=", k, " h=", h, " expected=", expected);
          std::size_t i = 0;
          while (i < xs.size() && xs[i] == alphabet - 1) xs[i++] = 0;
          if (i == xs.size()) break;
          ++xs[i];
        }
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("diagonal value (-1)^k (k-1)! for k = 2..7");
    for (int k = 2; k <= 7; ++k) {
      const std::vector<int> diag(static_cast<std::size_t>(k), 0);
      const long long h = h_k_eval(std::span<const int>(diag));
      c.expect(h == (k % 2 == 0 ? 1 : -1) * factorial(k - 1), "k=", k, " h=", h);
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("partition expansion reproduces H_k exactly, trivial partition absent, k <= 5");
    for (int k = 2; k <= 5; ++k) {
      const auto coeffs = partition_coefficients(k);
      for (const auto& [part, coef] : coeffs) c.expect(!part.trivial(), "trivial partition at k=", k);
      std::vector<int> xs(static_cast<std::size_t>(k), 0);
      while (true) {
        const std::span<const int> view(xs);
        c.expect(evaluate_partition_expansion(coeffs, view) == h_k_eval(view), "k=", k);
        std::size_t i = 0;
        while (i < xs.size() && xs[i] == 3) xs[i++] = 0;
        if (i == xs.size()) break;
        ++xs[i];
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("J_k case structure on generated configurations");
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 1500; ++trial) {
      const int k = std::uniform_int_distribution<int>(1, 4)(rng);
      const int dim = std::uniform_int_distribution<int>(1, 4)(rng);
      const int m = std::uniform_int_distribution<int>(1, 3)(rng);
      const std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11}[rng() % 3];
      // Points share the coordinate-sum parity so squared distances are even.
      std::vector<Point> pool;
      for (int attempt = 0; attempt < 12; ++attempt) {
        Point x(static_cast<std::size_t>(dim));
        for (auto& v : x) v = std::uniform_int_distribution<int>(0, 4)(rng);
        std::int64_t s = 0;
        for (auto v : x) s += v;
        if (s % 2 != 0) x[0] += 1;
        pool.push_back(x);
      }
      PointConfig cfg{{}, p, m};
      for (int i = 0; i <= k; ++i) {
        const bool reuse = !cfg.points.empty() && rng() % 3 == 0;
        cfg.points.push_back(reuse ? cfg.points[rng() % cfg.points.size()] : pool[rng() % pool.size()]);
      }
      if (p <= static_cast<std::uint64_t>(k)) continue;
      bool within = true, all_forbidden = true, all_equal = true, all_distinct = true;
      for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        for (std::size_t j = i + 1; j < cfg.points.size(); ++j) {
          const auto h = half_squared_distance(cfg.points[i], cfg.points[j]);
          within = within && h < static_cast<std::int64_t>((m + 1) * p);
          all_forbidden = all_forbidden && h > 0 && h % static_cast<std::int64_t>(p) == 0;
          all_equal = all_equal && h == 0;
          all_distinct = all_distinct && cfg.points[i] != cfg.points[j];
        }
      }
      if (!within) continue;
      const auto v = j_k_eval(cfg, k);
      const long long diag = ((k + 1) % 2 == 0 ? 1 : -1) * factorial(k);
      const auto pl = static_cast<long long>(p);
      const std::uint64_t expected = all_equal ? static_cast<std::uint64_t>(((diag % pl) + pl) % pl)
                                     : (all_distinct && all_forbidden) ? 1
                                                                        : 0;
      c.expect(v == expected, "k=", k, " p=", p, " got ", v, " expected ", expected);
      ++checked;
    }
    rep.checks.push_back(c.done(std::to_string(checked) + " configurations"));
  }
  {
    Check c("clique-free subsets obey the partition-rank counting bound (50 instances)");
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
      const int n = std::uniform_int_distribution<int>(1, 3)(rng);
      const int l = std::uniform_int_distribution<int>(0, 2)(rng);
      const int m = std::uniform_int_distribution<int>(1, 3)(rng);
      const int k = std::uniform_int_distribution<int>(1, 3)(rng);
      auto ground = parity_box(n, l);
      std::shuffle(ground.begin(), ground.end(), rng);
      ground.resize(std::max<std::size_t>(1, ground.size() - rng() % (ground.size() / 2 + 1)));
      const auto r = clique_bound_check(ground, l, m, k);
      c.expect(r.holds, "n=", n, " l=", l, " m=", m, " k=", k, " |A|=", r.max_clique_free);
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

}  // namespace

SuiteReport run_suite(std::string_view name, unsigned threads) {
  if (name == "theta") return theta_suite();
  if (name == "bounds") return bounds_suite(threads);
  if (name == "combinatorics") return combinatorics_suite();
  if (name == "tensor") return tensor_suite();
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace chromabound

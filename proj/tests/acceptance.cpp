// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chromabound/bound_engine.hpp"
#include "chromabound/lattice_combinatorics.hpp"
#include "chromabound/lattice_theta.hpp"
#include "chromabound/special_functions.hpp"
#include "chromabound/tensor_oracle.hpp"
#include "oracles.hpp"

using namespace chromabound;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note << "first failure: " << what << "; ";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  o.note.precision(10);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.note << "over time budget " << budget_s << " s; ";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.3f s) %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.note.str().c_str());
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "Gamma_chi, u*, inner max", 0.1, [](Outcome& o) {
    const auto g = gamma_chi();
    o.require(std::abs(g.value - 0.7998308498) <= 1e-9, "Gamma_chi = " + fmt(g.value));
    o.require(std::abs(g.u_star - 1.25643) <= 1e-5, "u* = " + fmt(g.u_star));
    o.require(std::abs(g.inner_max - 0.638172686) <= 1e-9, "inner max = " + fmt(g.inner_max));
    o.note << "Gamma_chi=" << g.value << " u*=" << g.u_star << " inner=" << g.inner_max;
  });

  criterion(2, "single-distance / clique table", 5.0, [](Outcome& o) {
    struct Cell {
      int m, k;
      double value;
    };
    const std::vector<Cell> cells{{1, 1, 1.239566}, {2, 1, 1.466299}, {3, 1, 1.667508}, {4, 1, 1.848150},
                                  {5, 1, 2.013079}, {2, 2, 1.118433}, {3, 2, 1.239566}, {3, 3, 1.083024},
                                  {4, 2, 1.356230}, {4, 3, 1.158048}, {4, 4, 1.063933}, {5, 2, 1.466299},
                                  {5, 3, 1.239566}, {5, 4, 1.118433}};
    const auto table = bound_table(5, 4);
    for (const auto& c : cells) {
      bool found = false;
      for (const auto& r : table) {
        if (r.m != c.m || r.k != c.k) continue;
        found = true;
        o.require(std::abs(r.value - c.value) <= 1e-6,
                  "(" + std::to_string(c.m) + "," + std::to_string(c.k) + ") = " + fmt(r.value));
        if (c.m == 1 && c.k == 1) o.require(r.l_star == 3, "l* at (1,1) = " + std::to_string(r.l_star));
      }
      o.require(found, "missing cell");
    }
    o.note << "14 cells within 1e-6";
  });

  criterion(3, "mu for Z, E8, Leech (K = 512)", 10.0, [](Outcome& o) {
    const auto z = mu_z();
    const auto e8 = mu_lattice(e8_series(512));
    const auto leech = mu_lattice(leech_series(512));
    o.require(std::abs(z.mu - 0.883337) <= 1e-6, "mu_Z = " + fmt(z.mu));
    o.require(std::abs(e8.mu - 0.88406) <= 1e-5, "mu_E8 = " + fmt(e8.mu));
    o.require(std::abs(leech.mu - 0.88407) <= 1e-5, "mu_Leech = " + fmt(leech.mu));
    for (const auto* r : {&z, &e8, &leech}) {
      o.require(r->mu > std::numbers::sqrt3 / 2, r->lattice_label + " does not exceed sqrt(3)/2");
    }
    o.note << "mu_Z=" << z.mu << " mu_E8=" << e8.mu << " mu_Leech=" << leech.mu;
  });

  criterion(4, "theta functional equation on 50 log-spaced x in [0.1, 10]", 0, [](Outcome& o) {
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      const double x = 0.1 * std::pow(100.0, i / 49.0);
      const double r = functional_equation_residual(x);
      worst = std::max(worst, r);
      o.require(r < 1e-10, "x = " + fmt(x));
    }
    o.note << "max residual " << worst;
  });

  criterion(5, "best_l value >= Gamma_chi/sqrt(gamma) and >= max (1-t) theta(t^gamma)", 0, [](Outcome& o) {
    const double g = gamma_chi().value;
    double min_margin = INFINITY, min_rel = INFINITY;
    for (int i = 1; i <= 19; ++i) {
      const double gamma = 0.05 * i;
      const double best = best_l(gamma).value;
      const double plain = one_minus_t_theta_max(gamma).value;
      o.require(best >= g / std::sqrt(gamma), "Gamma bound at gamma = " + fmt(gamma));
      // The two sides coincide to ~1e-14 for small gamma; compare with a relative rounding slack.
      o.require(best >= plain * (1 - 1e-12), "(1-t)theta bound at gamma = " + fmt(gamma));
      min_margin = std::min(min_margin, best - g / std::sqrt(gamma));
      min_rel = std::min(min_rel, (best - plain) / plain);
    }
    o.note << "min margin over Gamma bound " << min_margin << ", min relative excess over (1-t)theta " << min_rel;
  });

  criterion(6, "l* <= 2m+1 for m = 1..10 and l* < 2m for m >= 4 at gamma = 1/(m+1)", 0, [](Outcome& o) {
    std::ostringstream ls;
    for (int m = 1; m <= 10; ++m) {
      const auto r = chromatic_lower_bound({m, 1});
      ls << r.l_star << (m < 10 ? "," : "");
      o.require(r.l_star <= 2 * m + 1, "l* > 2m+1 at m = " + std::to_string(m));
      if (m >= 4) {
        o.require(r.l_star < 2 * m, "l* = " + std::to_string(r.l_star) + " at m = " + std::to_string(m) +
                                        " with F(l*) = " + fmt(r.value) + " vs F(2m-1) = " +
                                        fmt(maximize_over_t(r.gamma, 2 * m - 1).value));
      }
    }
    o.note << "l* for m=1..10: " << ls.str();
  });

  criterion(7, "combinatorics oracles", 30.0, [](Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
      for (int l = 0; l <= 3; ++l) {
        for (int d = 0; d <= n * l + 1; ++d) {
          o.require(count_box(n, l, d) == oracle::count_box(n, l, d), "count_box " + std::to_string(n));
        }
      }
    }
    std::mt19937_64 rng(2024);
    int profiles = 0;
    while (profiles < 200) {
      const int l = std::uniform_int_distribution<int>(1, 4)(rng);
      std::vector<int> a(static_cast<std::size_t>(l) + 1);
      for (auto& x : a) x = std::uniform_int_distribution<int>(0, 3)(rng);
      int n = 0;
      for (int x : a) n += x;
      if (n == 0 || n > 9) continue;
      std::int64_t f = 0;
      try {
        f = dmax_formula({a});
      } catch (const std::domain_error&) {
        continue;  // not admissible
      }
      o.require(f == dmax_bruteforce({a}), "dmax profile " + std::to_string(profiles));
      o.require(f == oracle::dmax(a), "dmax oracle " + std::to_string(profiles));
      ++profiles;
    }
    for (int j = 0; j <= 200; ++j) {
      const auto [lhs, rhs] = alternating_square_identity(j);
      o.require(lhs == rhs && rhs == static_cast<std::int64_t>(j) * (j + 1) / 2, "identity j = " + std::to_string(j));
    }
    for (int it = 0; it < 100; ++it) {
      const int n = std::uniform_int_distribution<int>(1, 8)(rng);
      const int l = std::uniform_int_distribution<int>(0, 3)(rng);
      std::vector<double> c(static_cast<std::size_t>(l) + 1);
      for (auto& x : c) x = std::uniform_real_distribution<double>(0, 3)(rng);
      const double t = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
      const auto r = multinomial_lemma_check(n, l, c, t);
      o.require(r.lhs_max >= r.rhs * (1 - 1e-12), "multinomial instance " + std::to_string(it));
    }
    o.note << "200 admissible profiles, 100 multinomial instances";
  });

  criterion(8, "tensor oracles", 60.0, [](Outcome& o) {
    long long fact = 1;
    for (int k = 2; k <= 5; ++k) {
      fact *= k - 1;
      const auto coeffs = partition_coefficients(k);
      for (const auto& entry : coeffs) o.require(!entry.first.trivial(), "trivial partition present");
      oracle::for_each_vector(k, 0, 3, [&](const std::vector<int>& xs) {
        const std::span<const int> v(xs);
        const long long h = h_k_eval(v);
        std::vector<int> s = xs;
        std::sort(s.begin(), s.end());
        const auto distinct = std::unique(s.begin(), s.end()) - s.begin();
        const long long expected = distinct == k ? 1 : distinct == 1 ? (k % 2 == 0 ? fact : -fact) : 0;
        o.require(h == expected && h == oracle::h_k(xs), "h_k at k = " + std::to_string(k));
        o.require(evaluate_partition_expansion(coeffs, v) == h, "reconstruction at k = " + std::to_string(k));
      });
    }
    std::mt19937_64 rng(77);
    int configs = 0;
    while (configs < 500) {
      const int k = std::uniform_int_distribution<int>(1, 4)(rng);
      const std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11}[rng() % 3];
      PointConfig cfg{{}, p, 2};
      for (int i = 0; i <= k; ++i) {
        if (!cfg.points.empty() && rng() % 3 == 0) {
          cfg.points.push_back(cfg.points[rng() % cfg.points.size()]);
          continue;
        }
        Point x(3);
        for (auto& v : x) v = std::uniform_int_distribution<int>(0, 3)(rng);
        if ((x[0] + x[1] + x[2]) % 2) ++x[0];
        cfg.points.push_back(x);
      }
      bool within = true, forbidden = true, equal = true, distinct = true;
      for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        for (std::size_t j = i + 1; j < cfg.points.size(); ++j) {
          const auto h = half_squared_distance(cfg.points[i], cfg.points[j]);
          within = within && h < static_cast<std::int64_t>(3 * p);
          forbidden = forbidden && h > 0 && h % static_cast<std::int64_t>(p) == 0;
          equal = equal && h == 0;
          distinct = distinct && h != 0;
        }
      }
      if (!within) continue;
      const auto v = j_k_eval(cfg, k);
      if (equal) {
        o.require(v != 0, "diagonal J_k vanished");
      } else {
        o.require(v == ((distinct && forbidden) ? 1u : 0u), "J_k case structure at k = " + std::to_string(k));
      }
      ++configs;
    }
    for (int it = 0; it < 50; ++it) {
      const int n = 1 + it % 3, l = it % 3, m = 1 + (it / 3) % 3, k = 1 + (it / 9) % 3;
      const auto r = clique_bound_check(n, l, m, k);
      o.require(r.holds, "clique bound instance " + std::to_string(it));
    }
    o.note << "exhaustive k <= 5 over 4 letters, 500 J_k configurations, 50 clique instances";
  });

  std::printf("[N/A ] criterion 9: chromatic numbers themselves, finite colorings and partition-rank values of J_k "
              "are bounded, not computed; no check is possible at this scale\n");

  std::printf("%s: %d criterion failure(s)\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}

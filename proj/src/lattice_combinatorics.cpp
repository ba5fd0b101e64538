#include "chromabound/lattice_combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chromabound {

int CompositionProfile::n() const { return std::accumulate(a.begin(), a.end(), 0); }

BigInt count_box(int n, int l, int d) {
  if (n < 0 || l < 0 || d < 0) throw std::domain_error("count_box: arguments must be nonnegative");
  const int cap = std::min(d, n * l);
  // coeff[s] = number of vectors built so far with coordinate sum s.
  std::vector<BigInt> coeff(static_cast<std::size_t>(cap) + 1);
  coeff[0] = 1;
  for (int step = 0; step < n; ++step) {
    // Multiply by 1 + x + ... + x^l: next[s] = coeff[s-l] + ... + coeff[s].
    std::vector<BigInt> next(coeff.size());
    BigInt window = 0;
    for (int s = 0; s <= cap; ++s) {
      window += coeff[static_cast<std::size_t>(s)];
      if (s - l - 1 >= 0) window -= coeff[static_cast<std::size_t>(s - l - 1)];
      next[static_cast<std::size_t>(s)] = window;
    }
    coeff = std::move(next);
  }
  BigInt total = 0;
  for (const auto& c : coeff) total += c;
  return total;
}

double gf_upper_bound(int n, int l, int d, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("gf_upper_bound: t must lie in (0, 1)");
  if (n < 0 || l < 0 || d < 0) {
    throw std::domain_error("gf_upper_bound: arguments must be nonnegative");
  }
  const double base = (1.0 - std::pow(t, l + 1)) / (1.0 - t);
  return std::exp(n * std::log(base) - d * std::log(t));
}

std::vector<std::int64_t> reorder_profile(const CompositionProfile& profile) {
  const int l = profile.l();
  if (l < 0) throw std::domain_error("reorder_profile: empty profile");
  std::vector<std::int64_t> b(static_cast<std::size_t>(l) + 1);
  int top = l, bottom = 0;
  for (int i = 0; i <= l; ++i) {
    const int src = i % 2 == 0 ? top-- : bottom++;
    b[static_cast<std::size_t>(l - i)] = profile.a[static_cast<std::size_t>(src)];
  }
  return b;
}

std::int64_t dmax_formula(const CompositionProfile& profile) {
  for (const int ai : profile.a) {
    if (ai < 0) throw std::domain_error("dmax_formula: negative multiplicity");
  }
  // A single symbol gives one point.
  if (std::count_if(profile.a.begin(), profile.a.end(), [](int ai) { return ai > 0; }) <= 1) return 0;
  const auto b = reorder_profile(profile);
  for (std::size_t j = 0; j + 1 < b.size(); ++j) {
    if (b[j + 1] > b[j]) {
      throw std::domain_error("dmax_formula: b_" + std::to_string(j + 1) + " = " +
                              std::to_string(b[j + 1]) + " exceeds b_" + std::to_string(j) +
                              " = " + std::to_string(b[j]));
    }
  }
  std::int64_t total = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    total += b[j] * static_cast<std::int64_t>((j + 1) * j / 2);
  }
  return total;
}

std::int64_t dmax_bruteforce(const CompositionProfile& profile, std::size_t budget) {
  std::vector<int> base;
  for (std::size_t i = 0; i < profile.a.size(); ++i) {
    if (profile.a[i] < 0) throw std::domain_error("dmax_bruteforce: negative multiplicity");
    base.insert(base.end(), static_cast<std::size_t>(profile.a[i]), static_cast<int>(i));
  }
  // Every pair (x, y) is a common coordinate permutation of (base, y'), so
  // fixing x = base and scanning all arrangements y loses nothing.
  std::vector<int> y = base;
  std::int64_t best = 0;
  std::size_t seen = 0;
  do {
    if (++seen > budget) throw std::length_error("dmax_bruteforce: enumeration budget exceeded");
    std::int64_t sq = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const std::int64_t diff = base[i] - y[i];
      sq += diff * diff;
    }
    best = std::max(best, sq / 2);
  } while (std::next_permutation(y.begin(), y.end()));
  return best;
}

std::pair<std::int64_t, std::int64_t> alternating_square_identity(int j) {
  if (j < 0) throw std::domain_error("alternating_square_identity: j must be nonnegative");
  std::int64_t lhs = 0;
  for (std::int64_t i = 0; i <= j; ++i) {
    const std::int64_t diff = j - i;
    lhs += (i % 2 == 0 ? 1 : -1) * diff * diff;
  }
  return {lhs, static_cast<std::int64_t>(j) * (j + 1) / 2};
}

MultinomialCheck multinomial_lemma_check(int n, int l, std::span<const double> c, double t,
                                         std::size_t budget) {
  if (n < 1 || l < 0) throw std::domain_error("multinomial_lemma_check: need n >= 1, l >= 0");
  if (c.size() != static_cast<std::size_t>(l) + 1) {
    throw std::domain_error("multinomial_lemma_check: c must have l + 1 entries");
  }
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("multinomial_lemma_check: t must lie in (0, 1)");
  for (const double ci : c) {
    if (!(ci >= 0.0)) throw std::domain_error("multinomial_lemma_check: c must be nonnegative");
  }

  const auto parts = static_cast<std::size_t>(l) + 1;
  std::vector<double> log_fact(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 1; i <= n; ++i) log_fact[static_cast<std::size_t>(i)] = log_fact[i - 1] + std::log(i);

  MultinomialCheck out;
  double power_sum = 0.0;
  for (const double ci : c) power_sum += std::pow(t, ci);
  out.rhs = std::pow(power_sum, n) / std::pow(n + 1.0, l);

  std::vector<int> a(parts, 0);
  std::size_t seen = 0;
  // Odometer over a_0..a_{l-1}; a_l takes the remainder.
  auto visit = [&] {
    if (++seen > budget) throw std::length_error("multinomial_lemma_check: budget exceeded");
    double log_term = log_fact[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < parts; ++i) {
      log_term -= log_fact[static_cast<std::size_t>(a[i])];
      log_term += c[i] * a[i] * std::log(t);
    }
    const double term = std::exp(log_term);
    out.unrestricted_max = std::max(out.unrestricted_max, term);
    bool admissible = true;
    for (std::size_t i = 0; i < parts && admissible; ++i) {
      for (std::size_t j = 0; j < parts; ++j) {
        if (c[i] > c[j] && a[i] > a[j]) {
          admissible = false;
          break;
        }
      }
    }
    if (admissible && term > out.lhs_max) {
      out.lhs_max = term;
      out.argmax = a;
    }
  };
  std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int remaining) {
    if (idx + 1 == parts) {
      a[idx] = remaining;
      visit();
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      a[idx] = v;
      fill(idx + 1, remaining - v);
    }
  };
  fill(0, n);
  return out;
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  // The first twelve primes are a deterministic witness set for all 64-bit x.
  constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const u64 p : witnesses) {
    if (x % p == 0) return x == p;
  }
  u64 d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (const u64 a : witnesses) {
    u64 y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t x) {
  if (x >= (u64{1} << 63)) throw std::overflow_error("next_prime: x must be below 2^63");
  u64 candidate = x + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

PrimeGapReport prime_gap_report(std::int64_t d_max, int m) {
  if (d_max < 0 || m < 1) throw std::domain_error("prime_gap_report: need d_max >= 0, m >= 1");
  // A prime exceeds the rational d_max/(m+1) iff it exceeds its floor.
  const auto threshold_floor = static_cast<u64>(d_max / (m + 1));
  PrimeGapReport r;
  r.p = next_prime(threshold_floor);
  r.epsilon0 = static_cast<double>(r.p) - static_cast<double>(d_max) / (m + 1);
  return r;
}

}  // namespace chromabound

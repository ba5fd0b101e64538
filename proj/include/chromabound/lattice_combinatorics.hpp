#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chromabound/bigint.hpp"

namespace chromabound {

/// Symbol multiplicities of a point class: a[i] coordinates equal i, i = 0..l.
struct CompositionProfile {
  std::vector<int> a;

  int l() const { return static_cast<int>(a.size()) - 1; }
  int n() const;
};

/// #{ v in {0..l}^n : sum v_i <= d }, exact.
BigInt count_box(int n, int l, int d);

/// (1 + t + ... + t^l)^n / t^d, an upper bound for count_box(n, l, d) at every t in (0, 1).
double gf_upper_bound(int n, int l, int d, double t);

/// The b sequence obtained from a by taking b_l = a_l, b_{l-1} = a_0,
/// b_{l-2} = a_{l-1}, b_{l-3} = a_1, ... (alternately from the top and bottom).
std::vector<std::int64_t> reorder_profile(const CompositionProfile& profile);

/// max over x, y in the class of (1/2)|x - y|^2, as sum_j b_j C(j+1, 2).
/// Requires b non-increasing; otherwise throws std::domain_error naming the
/// first offending pair of indices.
std::int64_t dmax_formula(const CompositionProfile& profile);

/// Same quantity by enumerating every arrangement of the class. Throws
/// std::length_error when the class has more than `budget` elements.
std::int64_t dmax_bruteforce(const CompositionProfile& profile, std::size_t budget = 100'000);

/// (sum_{i=0}^{j} (j-i)^2 (-1)^i, C(j+1, 2)).
std::pair<std::int64_t, std::int64_t> alternating_square_identity(int j);

struct MultinomialCheck {
  double lhs_max = 0.0;           // max over the order-restricted compositions
  double unrestricted_max = 0.0;  // max over all compositions
  double rhs = 0.0;               // (sum_i t^{c_i})^n / (n+1)^l
  std::vector<int> argmax;
};

/// Enumerates compositions a of n into l+1 parts and maximizes
/// multinomial(n; a) t^{sum c_i a_i}. The restricted set keeps compositions
/// with a_i <= a_j whenever c_i > c_j. Throws std::length_error past `budget`
/// compositions.
MultinomialCheck multinomial_lemma_check(int n, int l, std::span<const double> c, double t,
                                         std::size_t budget = 1'000'000);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t x);

/// Smallest prime strictly greater than x; x must be below 2^63.
std::uint64_t next_prime(std::uint64_t x);

struct PrimeGapReport {
  std::uint64_t p = 0;
  double epsilon0 = 0.0;  // p - d_max / (m + 1)
};

/// Smallest prime above d_max / (m + 1) and its excess over that threshold.
PrimeGapReport prime_gap_report(std::int64_t d_max, int m);

}  // namespace chromabound

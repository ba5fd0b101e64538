#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromabound/bigint.hpp"
#include "chromabound/lattice_combinatorics.hpp"

namespace chromabound {

/// Bijection of {0, ..., k-1}; image[i] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int k);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  /// Disjoint cycles, each starting at its smallest element, fixed points included.
  std::vector<std::vector<int>> cycles() const;
  int sign() const;

 private:
  std::vector<int> image_;
};

/// True iff sigma is a single cycle through all k points.
bool is_k_cycle(const Permutation& sigma);

/// Partition of {0, ..., k-1} into nonempty blocks, stored canonically
/// (each block sorted, blocks ordered by first element).
class SetPartition {
 public:
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool trivial() const { return blocks_.size() == 1; }
  /// 1-based rendering, e.g. {{1,2},{3}}.
  std::string to_string() const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

namespace detail {

struct SignedCycles {
  int sign;
  std::vector<std::vector<int>> cycles;  // non-singleton cycles only
};

/// The permutations of S_k that are not k-cycles, with their signs; 2 <= k <= 7.
const std::vector<SignedCycles>& non_k_cycle_terms(int k);

}  // namespace detail

/// Distinctness indicator: sum over non-k-cycles sigma of sgn(sigma) times
/// [xs is constant on every cycle of sigma]. Labels are compared with ==.
template <class T>
long long h_k_eval(std::span<const T> xs) {
  const int k = static_cast<int>(xs.size());
  if (k < 2 || k > 7) throw std::domain_error("h_k_eval: k must lie in 2..7");
  long long total = 0;
  for (const auto& term : detail::non_k_cycle_terms(k)) {
    bool fixed = true;
    for (const auto& cyc : term.cycles) {
      for (std::size_t i = 1; i < cyc.size() && fixed; ++i) {
        fixed = xs[static_cast<std::size_t>(cyc[i])] == xs[static_cast<std::size_t>(cyc[0])];
      }
      if (!fixed) break;
    }
    if (fixed) total += term.sign;
  }
  return total;
}

/// c_P grouped by the cycle partition of each non-k-cycle permutation.
std::map<SetPartition, long long> partition_coefficients(int k);

/// sum_P c_P prod_{A in P} delta_A(xs).
template <class T>
long long evaluate_partition_expansion(const std::map<SetPartition, long long>& coeffs,
                                       std::span<const T> xs) {
  long long total = 0;
  for (const auto& [partition, c] : coeffs) {
    bool all_equal = true;
    for (const auto& block : partition.blocks()) {
      for (std::size_t i = 1; i < block.size() && all_equal; ++i) {
        all_equal = xs[static_cast<std::size_t>(block[i])] ==
                    xs[static_cast<std::size_t>(block[0])];
      }
    }
    if (all_equal) total += c;
  }
  return total;
}

using Point = std::vector<std::int64_t>;

struct PointConfig {
  std::vector<Point> points;
  std::uint64_t p = 2;  // prime modulus
  int m = 1;            // number of forbidden distances
};

enum class ConfigErrorKind { odd_squared_distance, modulus_not_prime, diameter_too_large, bad_shape };

class PointConfigError : public std::domain_error {
 public:
  PointConfigError(ConfigErrorKind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}
  ConfigErrorKind kind() const { return kind_; }

 private:
  ConfigErrorKind kind_;
};

/// |x - y|^2 / 2 for points with an even squared distance.
std::int64_t half_squared_distance(const Point& x, const Point& y);

/// prod_{i<j} (1 - (|x_i - x_j|^2 / 2)^{p-1}) mod p over the selected points.
/// Validates the whole configuration: every squared distance even, p prime,
/// and every half squared distance below (m + 1) p.
std::uint64_t f_r_eval(const PointConfig& cfg, std::span<const std::size_t> subset);

/// H_{k+1}(points) * F_{k+1}(points) reduced to [0, p); cfg holds k+1 points
/// and the labels of H are the points themselves.
std::uint64_t j_k_eval(const PointConfig& cfg, int k);

struct CliqueBoundReport {
  std::size_t ground_size = 0;
  std::int64_t d_max = 0;
  std::uint64_t p = 0;
  std::size_t max_clique_free = 0;    // largest A with no (k+1)-clique
  std::vector<std::size_t> witness;   // indices of one such A
  BigInt bound;                       // 2^{k+1} count_box(n, l, k(p-1))
  bool holds = false;
};

/// {v in {0..l}^n : sum v even}; all pairwise squared distances are even.
std::vector<Point> parity_box(int n, int l);

/// All arrangements of a composition profile (the class S_n^a).
std::vector<Point> profile_class(const CompositionProfile& profile);

/// Largest subset of `ground` (points of {0..l}^n, at most 24 of them) with no
/// k+1 distinct points pairwise at half squared distance in {p, 2p, ..., mp},
/// where p is the smallest prime above d_max / (m + 1); compared against the
/// partition-rank counting bound. Throws std::length_error once the search
/// visits more than node_budget nodes.
CliqueBoundReport clique_bound_check(std::span<const Point> ground, int l, int m, int k,
                                     std::size_t node_budget = 50'000'000);

/// Same with the parity box of {0..l}^n as ground set.
CliqueBoundReport clique_bound_check(int n, int l, int m, int k,
                                     std::size_t node_budget = 50'000'000);

}  // namespace chromabound

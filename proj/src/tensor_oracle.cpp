#include "chromabound/tensor_oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>

namespace chromabound {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (const int v : image_) {
    if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: image is not a bijection");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> image(static_cast<std::size_t>(k));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = (*this)(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::sign() const {
  int transpositions = 0;
  for (const auto& cyc : cycles()) transpositions += static_cast<int>(cyc.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

bool is_k_cycle(const Permutation& sigma) {
  const auto cyc = sigma.cycles();
  return cyc.size() == 1 && sigma.size() > 0;
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> all;
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(block.begin(), block.end());
    all.insert(all.end(), block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i)) {
      throw std::invalid_argument("SetPartition: blocks must partition {0..k-1}");
    }
  }
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += ',';
    out += '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[b][i] + 1);
    }
    out += '}';
  }
  return out + "}";
}

namespace detail {

const std::vector<SignedCycles>& non_k_cycle_terms(int k) {
  if (k < 2 || k > 7) throw std::domain_error("non_k_cycle_terms: k must lie in 2..7");
  static std::array<std::vector<SignedCycles>, 8> tables;
  static std::array<std::once_flag, 8> built;
  std::call_once(built[static_cast<std::size_t>(k)], [k] {
    auto& table = tables[static_cast<std::size_t>(k)];
    std::vector<int> image(static_cast<std::size_t>(k));
    std::iota(image.begin(), image.end(), 0);
    do {
      const Permutation sigma(image);
      if (is_k_cycle(sigma)) continue;
      SignedCycles term{sigma.sign(), {}};
      for (auto& cyc : sigma.cycles()) {
        if (cyc.size() > 1) term.cycles.push_back(std::move(cyc));
      }
      table.push_back(std::move(term));
    } while (std::next_permutation(image.begin(), image.end()));
  });
  return tables[static_cast<std::size_t>(k)];
}

}  // namespace detail

std::map<SetPartition, long long> partition_coefficients(int k) {
  if (k < 2 || k > 7) throw std::domain_error("partition_coefficients: k must lie in 2..7");
  std::map<SetPartition, long long> out;
  std::vector<int> image(static_cast<std::size_t>(k));
  std::iota(image.begin(), image.end(), 0);
  do {
    const Permutation sigma(image);
    if (is_k_cycle(sigma)) continue;
    out[SetPartition(sigma.cycles())] += sigma.sign();
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = static_cast<u64>(static_cast<u128>(result) * base % m);
    base = static_cast<u64>(static_cast<u128>(base) * base % m);
    exp >>= 1;
  }
  return result;
}

std::int64_t squared_distance(const Point& x, const Point& y) {
  if (x.size() != y.size()) {
    throw PointConfigError(ConfigErrorKind::bad_shape, "points have different dimensions");
  }
  std::int64_t sq = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::int64_t d = x[i] - y[i];
    sq += d * d;
  }
  return sq;
}

void validate(const PointConfig& cfg) {
  if (!is_prime(cfg.p)) {
    throw PointConfigError(ConfigErrorKind::modulus_not_prime,
                           "modulus " + std::to_string(cfg.p) + " is not prime");
  }
  if (cfg.m < 1) throw PointConfigError(ConfigErrorKind::bad_shape, "m must be >= 1");
  const auto limit = static_cast<std::int64_t>(cfg.m + 1) * static_cast<std::int64_t>(cfg.p);
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j) {
      const std::int64_t sq = squared_distance(cfg.points[i], cfg.points[j]);
      if (sq % 2 != 0) {
        throw PointConfigError(ConfigErrorKind::odd_squared_distance,
                               "odd squared distance between points " + std::to_string(i) +
                                   " and " + std::to_string(j));
      }
      if (sq / 2 >= limit) {
        throw PointConfigError(ConfigErrorKind::diameter_too_large,
                               "half squared distance " + std::to_string(sq / 2) +
                                   " is not below (m+1)p = " + std::to_string(limit));
      }
    }
  }
}

}  // namespace

std::int64_t half_squared_distance(const Point& x, const Point& y) {
  const std::int64_t sq = squared_distance(x, y);
  if (sq % 2 != 0) throw PointConfigError(ConfigErrorKind::odd_squared_distance, "odd squared distance");
  return sq / 2;
}

std::uint64_t f_r_eval(const PointConfig& cfg, std::span<const std::size_t> subset) {
  validate(cfg);
  u64 product = 1 % cfg.p;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (subset[a] >= cfg.points.size() || subset[b] >= cfg.points.size()) {
        throw PointConfigError(ConfigErrorKind::bad_shape, "subset index out of range");
      }
      const auto half = static_cast<u64>(
          half_squared_distance(cfg.points[subset[a]], cfg.points[subset[b]]));
      const u64 factor = (1 + cfg.p - pow_mod(half, cfg.p - 1, cfg.p)) % cfg.p;
      product = static_cast<u64>(static_cast<u128>(product) * factor % cfg.p);
    }
  }
  return product;
}

std::uint64_t j_k_eval(const PointConfig& cfg, int k) {
  if (k < 1 || k > 5) throw std::domain_error("j_k_eval: k must lie in 1..5");
  if (cfg.points.size() != static_cast<std::size_t>(k) + 1) {
    throw PointConfigError(ConfigErrorKind::bad_shape, "j_k_eval: need exactly k+1 points");
  }
  if (cfg.p <= static_cast<u64>(k)) throw std::domain_error("j_k_eval: p must exceed k");
  std::vector<std::size_t> all(cfg.points.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const u64 f = f_r_eval(cfg, all);
  const long long h = h_k_eval(std::span<const Point>(cfg.points));
  const auto p = static_cast<long long>(cfg.p);
  const auto h_mod = static_cast<u64>(((h % p) + p) % p);
  return static_cast<u64>(static_cast<u128>(h_mod) * f % cfg.p);
}

std::vector<Point> parity_box(int n, int l) {
  if (n < 1 || l < 0) throw std::domain_error("parity_box: need n >= 1, l >= 0");
  std::vector<Point> out;
  Point v(static_cast<std::size_t>(n), 0);
  while (true) {
    if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) % 2 == 0) out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == l) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

std::vector<Point> profile_class(const CompositionProfile& profile) {
  Point base;
  for (std::size_t i = 0; i < profile.a.size(); ++i) {
    if (profile.a[i] < 0) throw std::domain_error("profile_class: negative multiplicity");
    base.insert(base.end(), static_cast<std::size_t>(profile.a[i]), static_cast<std::int64_t>(i));
  }
  std::vector<Point> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

CliqueBoundReport clique_bound_check(std::span<const Point> ground, int l, int m, int k,
                                     std::size_t node_budget) {
  if (m < 1 || k < 1) throw std::domain_error("clique_bound_check: need m, k >= 1");
  if (ground.size() > 24) throw std::length_error("clique_bound_check: ground set exceeds 24 points");
  CliqueBoundReport report;
  report.ground_size = ground.size();
  if (ground.empty()) {
    report.holds = true;
    return report;
  }
  const auto n = static_cast<int>(ground.front().size());
  for (const Point& x : ground) {
    if (static_cast<int>(x.size()) != n) {
      throw PointConfigError(ConfigErrorKind::bad_shape, "ground points differ in dimension");
    }
    for (const auto c : x) {
      if (c < 0 || c > l) {
        throw PointConfigError(ConfigErrorKind::bad_shape, "ground point outside {0..l}^n");
      }
    }
  }

  const std::size_t size = ground.size();
  std::vector<std::vector<std::int64_t>> half(size, std::vector<std::int64_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      half[i][j] = half[j][i] = half_squared_distance(ground[i], ground[j]);
      report.d_max = std::max(report.d_max, half[i][j]);
    }
  }
  report.p = prime_gap_report(report.d_max, m).p;
  const auto p = static_cast<std::int64_t>(report.p);

  std::vector<std::uint32_t> adj(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const std::int64_t h = half[i][j];
      if (i != j && h > 0 && h % p == 0 && h / p <= m) adj[i] |= std::uint32_t{1} << j;
    }
  }

  std::size_t nodes = 0;
  auto tick = [&] {
    if (++nodes > node_budget) throw std::length_error("clique_bound_check: node budget exceeded");
  };
  std::function<bool(std::uint32_t, int)> has_clique = [&](std::uint32_t mask, int need) {
    if (need == 0) return true;
    if (std::popcount(mask) < need) return false;
    while (mask) {
      tick();
      const int v = std::countr_zero(mask);
      mask &= mask - 1;
      if (has_clique(mask & adj[static_cast<std::size_t>(v)], need - 1)) return true;
    }
    return false;
  };

  std::uint32_t best_mask = 0;
  int best_count = -1;
  std::function<void(std::size_t, std::uint32_t, int)> search = [&](std::size_t idx,
                                                                    std::uint32_t chosen,
                                                                    int count) {
    tick();
    if (count + static_cast<int>(size - idx) <= best_count) return;
    if (idx == size) {
      best_count = count;
      best_mask = chosen;
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << idx;
    if (!has_clique(chosen & adj[idx], k)) search(idx + 1, chosen | bit, count + 1);
    search(idx + 1, chosen, count);
  };
  search(0, 0, 0);

  report.max_clique_free = static_cast<std::size_t>(best_count);
  for (std::size_t i = 0; i < size; ++i) {
    if (best_mask & (std::uint32_t{1} << i)) report.witness.push_back(i);
  }
  report.bound = (BigInt(1) << (k + 1)) * count_box(n, l, k * static_cast<int>(report.p - 1));
  report.holds = BigInt(report.max_clique_free) <= report.bound;
  return report;
}

CliqueBoundReport clique_bound_check(int n, int l, int m, int k, std::size_t node_budget) {
  if (n < 1 || n > 3 || l < 0 || l > 2) {
    throw std::domain_error("clique_bound_check: need 1 <= n <= 3 and 0 <= l <= 2");
  }
  const auto ground = parity_box(n, l);
  return clique_bound_check(ground, l, m, k, node_budget);
}

}  // namespace chromabound

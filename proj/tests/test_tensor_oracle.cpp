#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chromabound/tensor_oracle.hpp"
#include "oracles.hpp"

using namespace chromabound;

TEST_CASE("Permutation basics") {
  CHECK_FALSE(is_k_cycle(Permutation::identity(3)));
  CHECK(is_k_cycle(Permutation({1, 2, 0})));
  CHECK_FALSE(is_k_cycle(Permutation({1, 0, 2})));
  CHECK(Permutation({1, 0, 2}).sign() == -1);
  CHECK(Permutation({1, 2, 0}).sign() == 1);
  CHECK(Permutation({1, 2, 0}).cycles().size() == 1);
  CHECK_THROWS(Permutation({0, 0, 1}));
  CHECK_THROWS(Permutation({0, 3, 1}));
}

TEST_CASE("SetPartition canonical form") {
  const SetPartition a({{2, 0}, {1}});
  const SetPartition b({{1}, {0, 2}});
  CHECK(a == b);
  CHECK(a.to_string() == "{{1,3},{2}}");
  CHECK(SetPartition({{0, 1, 2}}).trivial());
  CHECK_THROWS(SetPartition({{0, 1}, {1}}));
}

TEST_CASE("h_k_eval small cases") {
  const std::vector<int> distinct{4, 7, 9}, pair{4, 4, 9}, same{4, 4, 4};
  CHECK(h_k_eval(std::span<const int>(distinct)) == 1);
  CHECK(h_k_eval(std::span<const int>(pair)) == 0);
  CHECK(h_k_eval(std::span<const int>(same)) == -2);
  const std::vector<int> two{1, 1};
  CHECK(h_k_eval(std::span<const int>(two)) == 1);
  const std::vector<int> eight(8, 0);
  CHECK_THROWS_AS(h_k_eval(std::span<const int>(eight)), std::domain_error);
}

TEST_CASE("h_k_eval matches permutation enumeration on every 4-letter tuple, k <= 5") {
  for (int k = 2; k <= 5; ++k) {
    oracle::for_each_vector(k, 0, 3, [&](const std::vector<int>& xs) {
      CHECK(h_k_eval(std::span<const int>(xs)) == oracle::h_k(xs));
    });
  }
}

TEST_CASE("diagonal value has magnitude (k-1)!") {
  long long f = 1;
  for (int k = 2; k <= 7; ++k) {
    f *= (k - 1);
    const std::vector<int> xs(static_cast<std::size_t>(k), 3);
    CHECK(h_k_eval(std::span<const int>(xs)) == (k % 2 == 0 ? f : -f));
  }
}

TEST_CASE("partition_coefficients") {
  const auto k2 = partition_coefficients(2);
  REQUIRE(k2.size() == 1);
  CHECK(k2.begin()->first == SetPartition({{0}, {1}}));
  CHECK(k2.begin()->second == 1);

  const auto k3 = partition_coefficients(3);
  CHECK(k3.size() == 4);
  CHECK(k3.at(SetPartition({{0}, {1}, {2}})) == 1);
  CHECK(k3.at(SetPartition({{0, 1}, {2}})) == -1);
  CHECK(k3.at(SetPartition({{0, 2}, {1}})) == -1);
  CHECK(k3.at(SetPartition({{1, 2}, {0}})) == -1);
  CHECK(k3.count(SetPartition({{0, 1, 2}})) == 0);

  for (int k = 2; k <= 5; ++k) {
    const auto coeffs = partition_coefficients(k);
    for (const auto& entry : coeffs) CHECK_FALSE(entry.first.trivial());
    oracle::for_each_vector(k, 0, 2, [&](const std::vector<int>& xs) {
      const std::span<const int> v(xs);
      CHECK(evaluate_partition_expansion(coeffs, v) == oracle::h_k(xs));
    });
  }
}

TEST_CASE("f_r_eval") {
  PointConfig cfg{{{0, 0}, {0, 0}}, 5, 1};
  const std::vector<std::size_t> both{0, 1};
  CHECK(f_r_eval(cfg, both) == 1);
  cfg.points = {{0, 0}, {3, 1}};  // half squared distance 5 = p
  CHECK(f_r_eval(cfg, both) == 1);
  cfg.points = {{0, 0}, {1, 1}};  // half squared distance 1
  CHECK(f_r_eval(cfg, both) == 0);
}

TEST_CASE("f_r_eval configuration errors are distinguished") {
  const std::vector<std::size_t> both{0, 1};
  auto kind_of = [&](const PointConfig& cfg) {
    try {
      (void)f_r_eval(cfg, both);
    } catch (const PointConfigError& e) {
      return e.kind();
    }
    FAIL("expected PointConfigError");
    return ConfigErrorKind::bad_shape;
  };
  CHECK(kind_of({{{0, 0}, {1, 0}}, 5, 1}) == ConfigErrorKind::odd_squared_distance);
  CHECK(kind_of({{{0, 0}, {1, 1}}, 6, 1}) == ConfigErrorKind::modulus_not_prime);
  CHECK(kind_of({{{0, 0}, {4, 4}}, 3, 1}) == ConfigErrorKind::diameter_too_large);
  CHECK(kind_of({{{0, 0}, {1, 1, 0}}, 5, 1}) == ConfigErrorKind::bad_shape);
}

TEST_CASE("j_k_eval case structure") {
  PointConfig cfg{{{0, 0}, {3, 1}}, 5, 1};
  CHECK(j_k_eval(cfg, 1) == 1);
  cfg = {{{1, 1}, {1, 1}, {1, 1}}, 7, 1};
  const auto diag = j_k_eval(cfg, 2);
  // H_3 on a constant triple is -2, so J_2 is -2 mod 7
  CHECK(diag == 5);
  cfg = {{{0, 0}, {0, 0}, {3, 1}}, 7, 2};
  CHECK(j_k_eval(cfg, 2) == 0);
  cfg = {{{0, 0}, {1, 1}}, 2, 1};
  CHECK_THROWS(j_k_eval(cfg, 2));
  cfg = {{{0, 0}, {1, 1}, {2, 0}}, 2, 1};
  CHECK_THROWS(j_k_eval(cfg, 2));
}

TEST_CASE("parity_box and profile_class") {
  const auto box = parity_box(2, 1);
  CHECK(box.size() == 2);
  CHECK(parity_box(3, 2).size() == 14);
  const auto cls = profile_class({{1, 1, 1}});
  CHECK(cls.size() == 6);
}

TEST_CASE("clique_bound_check") {
  const auto r = clique_bound_check(2, 1, 1, 1);
  CHECK(r.holds);
  CHECK(r.max_clique_free <= r.ground_size);
  // a ground set with no forbidden pair is clique free for k = 1
  const std::vector<Point> lonely{{0, 0, 0}};
  const auto s = clique_bound_check(lonely, 2, 1, 1);
  CHECK(s.max_clique_free == 1);
  CHECK(s.holds);
  const auto t = clique_bound_check(3, 2, 1, 1);
  CHECK(t.holds);
  CHECK(t.witness.size() == t.max_clique_free);
  CHECK_THROWS_AS(clique_bound_check(3, 2, 1, 3, 5), std::length_error);
}

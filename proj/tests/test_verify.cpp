#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "simproj/errors.hpp"
#include "simproj/kahan.hpp"
#include "simproj/verify.hpp"
#include "test_util.hpp"

using namespace simproj;

namespace {

double direct_distance(const RealVector& a, const RealVector& x) {
  KahanAccumulator acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc.add((x[i] - a[i]) * (x[i] - a[i]));
  }
  return acc.value();
}

}  // namespace

TEST_CASE("oracle matches the sort-based algorithm on the reference row") {
  const RealVector a = testutil::reference_row();
  const OracleResult oracle = oracle_project(a);
  const ProjectionResult algo = project(a);
  REQUIRE(oracle.x.size() == algo.x.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(oracle.x[i] - algo.x[i]) <= 1e-9);
  }
  CHECK(oracle.support == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(std::abs(oracle.squared_distance - 3.522e-9) <= 1e-12);
}

TEST_CASE("oracle zeroes the negative coordinate") {
  const OracleResult r = oracle_project({0.7, 0.3, -0.1});
  CHECK(std::abs(r.x[0] - 0.7) <= 1e-15);
  CHECK(std::abs(r.x[1] - 0.3) <= 1e-15);
  CHECK(r.x[2] == 0.0);
  CHECK(r.support == std::vector<std::size_t>{0, 1});
  CHECK(std::abs(r.squared_distance - 0.01) <= 1e-12);
}

TEST_CASE("oracle keeps a feasible vertex fixed") {
  const OracleResult r = oracle_project({1.0, 0.0, 0.0});
  CHECK(r.x == RealVector{1.0, 0.0, 0.0});
  CHECK(r.squared_distance == 0.0);
}

TEST_CASE("oracle confirms the single-support distance") {
  const OracleResult r = oracle_project({2.0, 0.0});
  CHECK(r.x == RealVector{1.0, 0.0});
  CHECK(r.squared_distance == 1.0);
}

TEST_CASE("oracle rejects oversized and invalid input") {
  CHECK_THROWS_AS(oracle_project(RealVector(21, 0.1)), TooLargeError);
  CHECK_THROWS_AS(oracle_project({}), EmptyInputError);
  CHECK_THROWS_AS(oracle_project({1.0, 2.0}, -1.0), std::invalid_argument);
}

TEST_CASE("oracle confirms the boundary case") {
  // Hand recursion gives S = [0, 1]; the algorithm keeps both entries and
  // lands on [1, 0], as does exhaustive search.
  const RealVector a = {1.5, 0.5};
  const OracleResult oracle = oracle_project(a);
  const ProjectionResult algo = project(a);
  CHECK(algo.support_size == 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(oracle.x[i] - algo.x[i]) <= 1e-15);
  }
  CHECK(oracle.x == RealVector{1.0, 0.0});
}

TEST_CASE("oracle agrees with the algorithm on random small instances") {
  std::mt19937_64 rng(20240801);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const RealVector a = testutil::random_vector(rng, n);
      const OracleResult oracle = oracle_project(a);
      const ProjectionResult algo = project(a);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(oracle.x[i] - algo.x[i]) <= 1e-9);
      }
    }
  }
}

TEST_CASE("oracle minimum beats random feasible points") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> positive(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 7);
    const RealVector a = testutil::random_vector(rng, n);
    const OracleResult oracle = oracle_project(a);

    for (int k = 0; k < 100; ++k) {
      RealVector y(n);
      double sum = 0.0;
      for (double& v : y) {
        v = positive(rng) + 1e-6;
        sum += v;
      }
      for (double& v : y) {
        v /= sum;  // rescale onto the simplex
      }
      CHECK(oracle.squared_distance <= direct_distance(a, y) + 1e-12);
    }
  }
}

TEST_CASE("kkt_check passes the reference projection") {
  const RealVector a = testutil::reference_row();
  const RealVector x = {0.9471115, 0.0516345, 0.0011295, 0.0001245,
                        0.0,       0.0,       0.0,       0.0};
  const KktReport report = kkt_check(a, x, 1.0, 1e-6);
  CHECK(report.pass());
  CHECK(std::abs(report.lambda_estimate - (-1.55e-5)) <= 1e-9);
}

TEST_CASE("kkt_check passes a fixed point with zero shift") {
  const RealVector a = {0.5, 0.25, 0.25};
  const KktReport report = kkt_check(a, a, 1.0, 1e-12);
  CHECK(report.pass());
  CHECK(report.lambda_estimate == 0.0);
  CHECK(report.max_violation == 0.0);
}

TEST_CASE("kkt_check flags an unequal shift") {
  // x deviates from a by +0.1 and -0.1 on the active set; only the
  // equal-shift condition can fail.
  const KktReport report =
      kkt_check({0.7, 0.3, -0.1}, {0.8, 0.2, 0.0}, 1.0, 1e-6);
  CHECK_FALSE(report.pass());
  CHECK(report.feasible_sum);
  CHECK(report.feasible_nonneg);
  CHECK_FALSE(report.equal_shift_ok);
  CHECK(report.inactive_ok);
  CHECK(report.max_violation >= 0.09);
}

TEST_CASE("kkt_check flags an infeasible sum and a negative entry") {
  const KktReport bad_sum = kkt_check({0.5, 0.5}, {0.6, 0.6}, 1.0, 1e-8);
  CHECK_FALSE(bad_sum.feasible_sum);

  const KktReport bad_sign = kkt_check({0.5, 0.5}, {1.1, -0.1}, 1.0, 1e-8);
  CHECK_FALSE(bad_sign.feasible_nonneg);
}

TEST_CASE("kkt_check flags positive slack off the support") {
  // x = [1, 0] against a = [0.5, 0.5]: shift is 0.5, so the inactive
  // coordinate has a + shift = 1 > 0.
  const KktReport report = kkt_check({0.5, 0.5}, {1.0, 0.0}, 1.0, 1e-8);
  CHECK_FALSE(report.inactive_ok);
}

TEST_CASE("kkt_check validates arguments") {
  CHECK_THROWS_AS(kkt_check({1.0}, {1.0, 0.0}, 1.0, 1e-8),
                  LengthMismatchError);
  CHECK_THROWS_AS(kkt_check({1.0}, {1.0}, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kkt_check({1.0}, {1.0}, 1.0, -1e-9), std::invalid_argument);
}

TEST_CASE("every algorithm output satisfies the certificate") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 64);
    const RealVector a = testutil::random_vector(rng, n);
    const ProjectionResult r = project(a);
    double norm = 0.0;
    for (double v : a) {
      norm = std::max(norm, std::abs(v));
    }
    const KktReport report = kkt_check(a, r.x, 1.0, 1e-8 * std::max(1.0, norm));
    CHECK(report.pass());
  }
}

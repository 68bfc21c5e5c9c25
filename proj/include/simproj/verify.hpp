#pragma once

#include <cstddef>
#include <vector>

#include "simproj/core.hpp"

namespace simproj {

struct OracleResult {
  RealVector x;
  std::vector<std::size_t> support;  // indices allowed to be positive
  double squared_distance = 0.0;
};

// Exhaustive minimiser of sum((x_i - a_i)^2) over the scaled simplex.
// Every nonempty index subset is tried as a candidate support, so the
// search shares no structure with the sort-based algorithm and serves as
// an independent ground truth. Capped at n <= 20 (2^n - 1 candidates);
// larger inputs raise TooLargeError. Ties are broken by the smaller
// support bitmask, so the result is deterministic.
OracleResult oracle_project(const RealVector& a, double target_sum = 1.0);

struct KktReport {
  bool feasible_sum = false;    // |sum(x) - target_sum| <= tol
  bool feasible_nonneg = false; // x_i >= -tol
  bool equal_shift_ok = false;  // active coordinates share one shift
  bool inactive_ok = false;     // a_i + shift <= tol off the active set
  double lambda_estimate = 0.0;
  double max_violation = 0.0;

  bool pass() const {
    return feasible_sum && feasible_nonneg && equal_shift_ok && inactive_ok;
  }
};

// First-order optimality certificate for x as the projection of a. The
// shift is estimated as the mean of x_i - a_i over the active set
// {i : x_i > tol}; all four conditions are checked against tol.
KktReport kkt_check(const RealVector& a, const RealVector& x,
                    double target_sum, double tol);

}  // namespace simproj

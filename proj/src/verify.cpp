#include "simproj/verify.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "simproj/errors.hpp"
#include "simproj/kahan.hpp"

namespace simproj {

namespace {

constexpr std::size_t kMaxOracleSize = 20;

}  // namespace

OracleResult oracle_project(const RealVector& a, double target_sum) {
  validate_vector(a);
  if (!std::isfinite(target_sum) || target_sum <= 0.0) {
    throw std::invalid_argument("target_sum must be a positive finite number");
  }
  const std::size_t n = a.size();
  if (n > kMaxOracleSize) {
    throw TooLargeError("oracle_project supports at most " +
                        std::to_string(kMaxOracleSize) +
                        " coordinates, got " + std::to_string(n));
  }

  KahanAccumulator total_sq_acc;
  for (double v : a) {
    total_sq_acc.add(v * v);
  }
  const double total_sq = total_sq_acc.value();

  const std::uint32_t mask_end = std::uint32_t{1} << n;
  double best_distance = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  double best_shift = 0.0;

  for (std::uint32_t mask = 1; mask < mask_end; ++mask) {
    double sub_sum = 0.0;
    double sub_sq = 0.0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      const double v = a[static_cast<std::size_t>(std::countr_zero(bits))];
      sub_sum += v;
      sub_sq += v * v;
    }
    const int size = std::popcount(mask);
    const double shift = (target_sum - sub_sum) / size;

    // A candidate is feasible only when every supported entry stays
    // nonnegative after the shift.
    bool feasible = true;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      if (a[static_cast<std::size_t>(std::countr_zero(bits))] + shift < 0.0) {
        feasible = false;
        break;
      }
    }
    if (!feasible) {
      continue;
    }

    const double distance = size * shift * shift + (total_sq - sub_sq);
    if (distance < best_distance ||
        (distance == best_distance && mask < best_mask)) {
      best_distance = distance;
      best_mask = mask;
      best_shift = shift;
    }
  }

  OracleResult result;
  result.x.assign(n, 0.0);
  for (std::uint32_t bits = best_mask; bits != 0; bits &= bits - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(bits));
    result.x[i] = a[i] + best_shift;
    result.support.push_back(i);
  }

  // Report the distance from the assembled point itself; unlike the
  // screening formula this cannot go negative through cancellation.
  KahanAccumulator dist;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = result.x[i] - a[i];
    dist.add(d * d);
  }
  result.squared_distance = dist.value();
  return result;
}

KktReport kkt_check(const RealVector& a, const RealVector& x,
                    double target_sum, double tol) {
  if (a.size() != x.size()) {
    throw LengthMismatchError("kkt_check: point has " +
                              std::to_string(a.size()) +
                              " coordinates but candidate has " +
                              std::to_string(x.size()));
  }
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw std::invalid_argument("tol must be positive");
  }
  const std::size_t n = a.size();

  KktReport report;

  KahanAccumulator sum_x;
  for (double v : x) {
    sum_x.add(v);
  }
  const double sum_violation = std::abs(sum_x.value() - target_sum);
  report.feasible_sum = sum_violation <= tol;

  double neg_violation = 0.0;
  for (double v : x) {
    neg_violation = std::max(neg_violation, -v);
  }
  report.feasible_nonneg = neg_violation <= tol;

  // Estimate the shift as the mean of x_i - a_i over the active set; the
  // mean treats all active coordinates symmetrically.
  KahanAccumulator shift_sum;
  std::size_t active = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] > tol) {
      shift_sum.add(x[i] - a[i]);
      ++active;
    }
  }
  report.lambda_estimate =
      active > 0 ? shift_sum.value() / static_cast<double>(active) : 0.0;

  double shift_violation = 0.0;
  double inactive_violation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] > tol) {
      shift_violation = std::max(
          shift_violation, std::abs(x[i] - a[i] - report.lambda_estimate));
    } else {
      inactive_violation =
          std::max(inactive_violation, a[i] + report.lambda_estimate);
    }
  }
  report.equal_shift_ok = shift_violation <= tol;
  report.inactive_ok = inactive_violation <= tol;

  report.max_violation =
      std::max(std::max(sum_violation, neg_violation),
               std::max(shift_violation, std::max(0.0, inactive_violation)));
  return report;
}

}  // namespace simproj

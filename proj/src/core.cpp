#include "simproj/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "simproj/errors.hpp"
#include "simproj/kahan.hpp"

namespace simproj {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void validate_target_sum(double target_sum) {
  if (!std::isfinite(target_sum) || target_sum <= 0.0) {
    throw std::invalid_argument("target_sum must be a positive finite number");
  }
}

}  // namespace

void validate_vector(const RealVector& a) {
  if (a.empty()) {
    throw EmptyInputError("input vector is empty");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i])) {
      throw NonFiniteError("entry " + std::to_string(i + 1) +
                           " is not finite");
    }
  }
}

SortedView sort_descending(const RealVector& a) {
  validate_vector(a);
  const std::size_t n = a.size();

  std::vector<std::pair<double, std::size_t>> keyed(n);
  for (std::size_t i = 0; i < n; ++i) {
    keyed[i] = {a[i], i};
  }
  // Tie-break on the original index: strict weak order, stable result.
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
    return l.first > r.first || (l.first == r.first && l.second < r.second);
  });

  SortedView sv;
  sv.sorted.resize(n);
  sv.perm.resize(n);
  sv.inv_perm.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    sv.sorted[k] = keyed[k].first;
    sv.perm[k] = keyed[k].second;
    sv.inv_perm[keyed[k].second] = k;
  }
  return sv;
}

GapSequence gap_sequence(const SortedView& sv) {
  const std::size_t n = sv.size();
  GapSequence g;
  g.s.resize(n);
  g.prefix.resize(n);

  // S_{m+1} = S_m + m * (sorted[m-1] - sorted[m]) with S_1 = 0. Every
  // increment is >= 0 exactly (the entries are sorted), so the computed
  // sequence never decreases, not even through rounding.
  g.s[0] = 0.0;
  for (std::size_t m = 1; m < n; ++m) {
    g.s[m] =
        g.s[m - 1] + static_cast<double>(m) * (sv.sorted[m - 1] - sv.sorted[m]);
  }

  KahanAccumulator prefix;
  for (std::size_t i = 0; i < n; ++i) {
    prefix.add(sv.sorted[i]);
    g.prefix[i] = prefix.value();
  }
  return g;
}

std::size_t find_support_size(const GapSequence& g, double target_sum) {
  if (!std::isfinite(target_sum) || target_sum < 0.0) {
    throw std::invalid_argument("target_sum must be non-negative");
  }
  // S_1 = 0 <= target_sum, so the scan always terminates with a valid
  // support size.
  for (std::size_t m = g.s.size(); m-- > 1;) {
    if (g.s[m] <= target_sum) {
      return m + 1;
    }
  }
  return 1;
}

double compute_shift(const GapSequence& g, std::size_t support_size,
                     double target_sum) {
  if (support_size < 1 || support_size > g.prefix.size()) {
    throw std::invalid_argument("support_size out of range");
  }
  return (target_sum - g.prefix[support_size - 1]) /
         static_cast<double>(support_size);
}

ProjectionResult project_with_support_size(const SortedView& sv,
                                           const GapSequence& g,
                                           std::size_t support_size,
                                           double target_sum) {
  const std::size_t n = sv.size();
  if (support_size < 1 || support_size > n) {
    throw std::invalid_argument("support_size out of range");
  }

  ProjectionResult r;
  r.support_size = support_size;
  r.perm = sv.perm;
  r.shift = compute_shift(g, support_size, target_sum);

  if (n == 1) {
    // Degenerate point: the single coordinate takes the whole budget.
    r.x = {target_sum};
    r.squared_distance = r.shift * r.shift;
    return r;
  }

  RealVector x_sorted(n, 0.0);
  for (std::size_t i = 0; i < support_size; ++i) {
    double xi = sv.sorted[i] + r.shift;
    if (xi < 0.0) {
      // Rounding can push the last supported coordinate a hair below
      // zero when S_m is right at the threshold; anything beyond a few
      // ulps is a genuine defect, not rounding.
      const double window =
          16.0 * kEps * std::max(1.0, std::abs(sv.sorted[i]));
      if (xi < -window) {
        throw std::logic_error(
            "projection produced a negative coordinate beyond rounding "
            "scale");
      }
      xi = 0.0;
    }
    x_sorted[i] = xi;
  }

  KahanAccumulator tail_sq;
  for (std::size_t i = n; i-- > support_size;) {
    tail_sq.add(sv.sorted[i] * sv.sorted[i]);
  }
  r.squared_distance =
      static_cast<double>(support_size) * r.shift * r.shift + tail_sq.value();

  r.x.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    r.x[sv.perm[k]] = x_sorted[k];
  }
  return r;
}

ProjectionResult project(const RealVector& a, double target_sum) {
  validate_target_sum(target_sum);
  const SortedView sv = sort_descending(a);
  const GapSequence g = gap_sequence(sv);
  const std::size_t m_star = find_support_size(g, target_sum);
  return project_with_support_size(sv, g, m_star, target_sum);
}

double squared_distance(const RealVector& a, const ProjectionResult& r) {
  if (a.size() != r.x.size() || a.size() != r.perm.size()) {
    throw std::invalid_argument(
        "projection result does not match the input vector");
  }
  const std::size_t m = r.support_size;
  KahanAccumulator tail_sq;
  for (std::size_t k = a.size(); k-- > m;) {
    const double v = a[r.perm[k]];
    tail_sq.add(v * v);
  }
  return static_cast<double>(m) * r.shift * r.shift + tail_sq.value();
}

std::vector<double> objective_sequence(const SortedView& sv,
                                       const GapSequence& g,
                                       double target_sum) {
  const std::size_t n = sv.size();
  if (g.s.size() != n) {
    throw std::invalid_argument("gap sequence does not match the sorted view");
  }
  std::vector<double> f(n);

  // f(1) = (target - a_1)^2 + sum_{i >= 2} a_i^2, with a compensated tail.
  KahanAccumulator tail_sq;
  for (std::size_t i = n; i-- > 1;) {
    tail_sq.add(sv.sorted[i] * sv.sorted[i]);
  }
  const double head = target_sum - sv.sorted[0];
  f[0] = head * head + tail_sq.value();

  // Each step subtracts a non-negative quantity, so the computed sequence
  // never increases.
  for (std::size_t m = 2; m <= n; ++m) {
    const double gap = target_sum - g.s[m - 1];
    const double decrement =
        (gap * gap) / (static_cast<double>(m) * static_cast<double>(m - 1));
    f[m - 1] = f[m - 2] - decrement;
  }
  return f;
}

}  // namespace simproj

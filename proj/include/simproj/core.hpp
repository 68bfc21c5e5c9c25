#pragma once

#include <cstddef>
#include <vector>

namespace simproj {

// A point in R^n. Entries must be finite and n >= 1; every public entry
// point validates this.
using RealVector = std::vector<double>;

// Throws EmptyInputError / NonFiniteError when `a` is not a valid point.
void validate_vector(const RealVector& a);

// Descending-sorted copy of a vector together with the permutation that
// produced it. perm maps sorted position -> original index; ties keep
// their original order, so the permutation is deterministic.
struct SortedView {
  RealVector sorted;
  std::vector<std::size_t> perm;
  std::vector<std::size_t> inv_perm;

  std::size_t size() const { return sorted.size(); }
};

// Gap values S_1..S_n (s[m-1] holds S_m) together with compensated prefix
// sums P_1..P_n of the sorted entries. S_1 = 0 and the sequence is
// non-decreasing, exactly, as computed.
struct GapSequence {
  std::vector<double> s;
  std::vector<double> prefix;
};

struct ProjectionResult {
  RealVector x;                   // projection, original index order
  std::size_t support_size = 0;   // number of coordinates sharing the shift
  double shift = 0.0;             // value added to every supported coordinate
  double squared_distance = 0.0;  // |x - a|^2
  std::vector<std::size_t> perm;  // sorted position -> original index
};

SortedView sort_descending(const RealVector& a);

GapSequence gap_sequence(const SortedView& sv);

// Largest support size m with S_m <= target_sum. Always exists for
// target_sum >= 0 because S_1 = 0. The comparison is exact: the
// projection is continuous in the input, so a one-ulp misclassification
// at the threshold moves the result by at most ulp scale.
std::size_t find_support_size(const GapSequence& g, double target_sum = 1.0);

// Common shift for the given support: (target_sum - P_m) / m.
double compute_shift(const GapSequence& g, std::size_t support_size,
                     double target_sum = 1.0);

// Assembles the projection for a fixed support size. project() calls this
// once the support size is known; exposed separately so callers can probe
// boundary cases where two support sizes are optimal.
ProjectionResult project_with_support_size(const SortedView& sv,
                                           const GapSequence& g,
                                           std::size_t support_size,
                                           double target_sum = 1.0);

// Exact Euclidean projection of `a` onto {x : sum(x) = target_sum, x >= 0}.
ProjectionResult project(const RealVector& a, double target_sum = 1.0);

// Squared distance recomputed in support form: m * shift^2 plus the sum of
// squares of the unsupported entries. Agrees with the direct expansion
// sum((x_i - a_i)^2) up to rounding.
double squared_distance(const RealVector& a, const ProjectionResult& r);

// Objective values f(1)..f(n) of the support-size relaxation. Diagnostic:
// the sequence is non-increasing and f(m*) equals the squared distance of
// the projection. Not used by project().
std::vector<double> objective_sequence(const SortedView& sv,
                                       const GapSequence& g,
                                       double target_sum = 1.0);

}  // namespace simproj

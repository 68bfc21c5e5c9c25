#pragma once

#include <cmath>

namespace simproj {

// Compensated accumulator (Neumaier's variant of Kahan summation).
// Tracks the rounding error of every addition and folds it back into the
// reported value, which keeps running sums accurate even when the terms
// span many orders of magnitude.
struct KahanAccumulator {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + compensation; }
};

}  // namespace simproj

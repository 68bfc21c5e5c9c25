#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "simproj/core.hpp"

namespace simproj {

// Rectangular table of rows, each projected independently.
struct MatrixTable {
  std::vector<RealVector> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

// Throws RaggedMatrixError / NonFiniteError / EmptyInputError.
void validate_matrix(const MatrixTable& m);

struct RowRecord {
  std::size_t row = 0;  // 0-based row index
  std::size_t support_size = 0;
  double shift = 0.0;
  double squared_distance = 0.0;
  bool zero_row = false;  // input row was all zeros; output is uniform
};

struct RegularizationReport {
  std::vector<RowRecord> rows;
  double max_squared_distance = 0.0;
  double total_squared_distance = 0.0;
};

// Projects every row onto {x : sum(x) = target_sum, x >= 0}. Rows are
// independent units of work; the OpenMP kernel and the serial reference
// below produce bitwise identical output.
std::pair<MatrixTable, RegularizationReport> regularize_matrix(
    const MatrixTable& m, double target_sum = 1.0);

// Serial reference, kept for the tests and the benchmark.
std::pair<MatrixTable, RegularizationReport> regularize_matrix_serial(
    const MatrixTable& m, double target_sum = 1.0);

}  // namespace simproj

#include "simproj/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

#include "simproj/errors.hpp"
#include "simproj/kahan.hpp"

namespace simproj {

namespace {

RowRecord project_row(const RealVector& row, std::size_t index,
                      double target_sum, RealVector& out) {
  ProjectionResult r = project(row, target_sum);
  out = std::move(r.x);

  RowRecord rec;
  rec.row = index;
  rec.support_size = r.support_size;
  rec.shift = r.shift;
  rec.squared_distance = r.squared_distance;
  rec.zero_row =
      std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; });
  return rec;
}

RegularizationReport build_report(std::vector<RowRecord> records) {
  RegularizationReport report;
  report.rows = std::move(records);
  KahanAccumulator total;
  for (const RowRecord& rec : report.rows) {
    report.max_squared_distance =
        std::max(report.max_squared_distance, rec.squared_distance);
    total.add(rec.squared_distance);
  }
  report.total_squared_distance = total.value();
  return report;
}

void validate_target_sum(double target_sum) {
  if (!std::isfinite(target_sum) || target_sum <= 0.0) {
    throw std::invalid_argument("target_sum must be a positive finite number");
  }
}

}  // namespace

void validate_matrix(const MatrixTable& m) {
  if (m.rows.empty()) {
    throw EmptyInputError("matrix has no rows");
  }
  const std::size_t cols = m.rows[0].size();
  if (cols == 0) {
    throw EmptyInputError("matrix row 1 is empty");
  }
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (m.rows[i].size() != cols) {
      throw RaggedMatrixError(
          "row " + std::to_string(i + 1) + " has " +
              std::to_string(m.rows[i].size()) + " field(s), expected " +
              std::to_string(cols),
          i + 1);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!std::isfinite(m.rows[i][j])) {
        throw NonFiniteError("entry at row " + std::to_string(i + 1) +
                             ", column " + std::to_string(j + 1) +
                             " is not finite");
      }
    }
  }
}

std::pair<MatrixTable, RegularizationReport> regularize_matrix(
    const MatrixTable& m, double target_sum) {
  validate_matrix(m);
  validate_target_sum(target_sum);

  const std::size_t row_count = m.row_count();
  MatrixTable out;
  out.rows.resize(row_count);
  std::vector<RowRecord> records(row_count);

  // Rows are pure, disjoint units of work, so the schedule cannot change
  // the result. Exceptions must not escape the parallel region; capture
  // the first one and rethrow after the join.
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(row_count); ++i) {
    try {
      const auto idx = static_cast<std::size_t>(i);
      records[idx] = project_row(m.rows[idx], idx, target_sum, out.rows[idx]);
    } catch (...) {
#pragma omp critical
      if (!error) {
        error = std::current_exception();
      }
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }

  return {std::move(out), build_report(std::move(records))};
}

std::pair<MatrixTable, RegularizationReport> regularize_matrix_serial(
    const MatrixTable& m, double target_sum) {
  validate_matrix(m);
  validate_target_sum(target_sum);

  const std::size_t row_count = m.row_count();
  MatrixTable out;
  out.rows.resize(row_count);
  std::vector<RowRecord> records(row_count);

  for (std::size_t i = 0; i < row_count; ++i) {
    records[i] = project_row(m.rows[i], i, target_sum, out.rows[i]);
  }

  return {std::move(out), build_report(std::move(records))};
}

}  // namespace simproj

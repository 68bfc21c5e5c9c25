#include "simproj/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "simproj/core.hpp"
#include "simproj/errors.hpp"
#include "simproj/io.hpp"
#include "simproj/matrix.hpp"
#include "simproj/verify.hpp"

namespace simproj::cli {

namespace {

struct IoError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot open input file '" + path + "'");
    }
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open output file '" + path + "'");
  }
  out << text;
  if (!out) {
    throw IoError("failed to write output file '" + path + "'");
  }
}

void validate_config(const CliConfig& config) {
  if (config.precision < 1 || config.precision > 17) {
    throw std::invalid_argument("precision must be in [1, 17]");
  }
  if (!std::isfinite(config.target_sum) || config.target_sum <= 0.0) {
    throw std::invalid_argument("target-sum must be a positive number");
  }
  if (config.delimiter == '\n' || config.delimiter == '\r') {
    throw std::invalid_argument("delimiter must not be a line break");
  }
}

double inf_norm(const RealVector& v) {
  double norm = 0.0;
  for (double x : v) {
    norm = std::max(norm, std::abs(x));
  }
  return norm;
}

void print_row_report(const RowRecord& rec) {
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "row %zu: support_size=%zu shift=%.10g squared_distance=%.10g",
                rec.row + 1, rec.support_size, rec.shift,
                rec.squared_distance);
  std::cerr << buf;
  if (rec.zero_row) {
    std::cerr << " zero_row";
  }
  std::cerr << '\n';
}

void print_aggregate_report(const RegularizationReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "rows=%zu max_squared_distance=%.10g "
                "total_squared_distance=%.10g",
                report.rows.size(), report.max_squared_distance,
                report.total_squared_distance);
  std::cerr << buf << '\n';
}

}  // namespace

int run(const CliConfig& config) {
  try {
    validate_config(config);

    const std::string text = read_input(config.input);
    const MatrixTable table = io::parse_table(text, config.delimiter);

    if (config.mode == Mode::Vector && table.row_count() != 1) {
      std::cerr << "invalid input: vector mode expects exactly one row, got "
                << table.row_count() << '\n';
      return kExitValidationError;
    }
    validate_matrix(table);

    const auto [projected, report] =
        regularize_matrix(table, config.target_sum);

    write_output(config.output,
                 io::format_table(projected, config.delimiter,
                                  config.precision));

    if (config.report) {
      for (const RowRecord& rec : report.rows) {
        print_row_report(rec);
      }
      if (config.mode == Mode::Matrix) {
        print_aggregate_report(report);
      }
    }

    if (config.verify) {
      for (std::size_t i = 0; i < table.row_count(); ++i) {
        const double tol = 1e-8 * std::max(1.0, inf_norm(table.rows[i]));
        const KktReport kkt = kkt_check(table.rows[i], projected.rows[i],
                                        config.target_sum, tol);
        if (!kkt.pass()) {
          char buf[160];
          std::snprintf(buf, sizeof buf,
                        "verification failed for row %zu "
                        "(max_violation=%.10g, tol=%.10g)",
                        i + 1, kkt.max_violation, tol);
          std::cerr << buf << '\n';
          return kExitVerificationError;
        }
      }
    }
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidationError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitValidationError;
  }
}

}  // namespace simproj::cli

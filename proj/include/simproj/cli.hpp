#pragma once

#include <string>

namespace simproj::cli {

enum class Mode { Vector, Matrix };

struct CliConfig {
  std::string input = "-";   // path, or "-" for standard input
  std::string output = "-";  // path, or "-" for standard output
  Mode mode = Mode::Vector;
  char delimiter = ',';
  double target_sum = 1.0;
  bool verify = false;
  bool report = false;
  int precision = 9;  // digits after the decimal point, in [1, 17]
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitValidationError = 2;
inline constexpr int kExitVerificationError = 3;

// Reads, projects, writes; the per-row report goes to standard error so
// the output stream stays machine-consumable. Returns one of the exit
// codes above. All numeric behaviour lives in the library; this is a
// shell around it.
int run(const CliConfig& config);

}  // namespace simproj::cli

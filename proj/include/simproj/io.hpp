#pragma once

#include <string>
#include <string_view>

#include "simproj/matrix.hpp"

namespace simproj::io {

// Parses delimiter-separated numeric text into a rectangular table. Rows
// split on \n or \r\n; fields split on `delimiter` with surrounding
// whitespace ignored; a trailing newline does not create an empty row.
// Numbers are decimal with an optional exponent. Throws ParseError with
// 1-based line/column for a malformed field and RaggedMatrixError when a
// row's length differs from the first row's.
MatrixTable parse_table(std::string_view text, char delimiter = ',');

// Fixed notation with `precision` digits after the decimal point.
// precision 17 switches to the shortest representation that parses back
// to the identical double.
std::string format_value(double v, int precision);

std::string format_row(const RealVector& row, char delimiter, int precision);

// One row per line, delimiter-separated, trailing newline.
std::string format_table(const MatrixTable& m, char delimiter, int precision);

}  // namespace simproj::io

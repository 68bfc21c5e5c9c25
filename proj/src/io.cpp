#include "simproj/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "simproj/errors.hpp"

namespace simproj::io {

namespace {

bool is_field_space(char c) {
  return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_field_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_field_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view field, std::size_t line,
                    std::size_t column) {
  const auto fail = [&]() -> ParseError {
    return ParseError("line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": '" + std::string(field) +
                          "' is not a number",
                      line, column);
  };
  if (field.empty()) {
    throw fail();
  }
  // Decimal only; strtod would happily take hex floats.
  if (field.find('x') != std::string_view::npos ||
      field.find('X') != std::string_view::npos) {
    throw fail();
  }

  // strtod wants a terminated buffer and, unlike from_chars, gives
  // overflow an explicit value (+-inf) that validation can reject later.
  const std::string buf(field);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) {
    throw fail();
  }
  return v;
}

}  // namespace

MatrixTable parse_table(std::string_view text, char delimiter) {
  MatrixTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    RealVector row;
    std::size_t field_start = 0;
    while (true) {
      const std::size_t sep = line.find(delimiter, field_start);
      const std::string_view raw =
          sep == std::string_view::npos
              ? line.substr(field_start)
              : line.substr(field_start, sep - field_start);
      const std::string_view field = trim(raw);

      // Column of the field's first meaningful character, 1-based.
      std::size_t column = field_start + 1;
      if (!field.empty()) {
        column = static_cast<std::size_t>(field.data() - line.data()) + 1;
      }
      row.push_back(parse_number(field, line_no, column));

      if (sep == std::string_view::npos) {
        break;
      }
      field_start = sep + 1;
    }

    if (!table.rows.empty() && row.size() != table.rows[0].size()) {
      throw RaggedMatrixError(
          "row " + std::to_string(line_no) + " has " +
              std::to_string(row.size()) + " field(s), expected " +
              std::to_string(table.rows[0].size()),
          line_no);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string format_value(double v, int precision) {
  if (precision < 1 || precision > 17) {
    throw std::invalid_argument("precision must be in [1, 17]");
  }
  if (v == 0.0) {
    v = 0.0;  // normalise -0
  }
  if (precision == 17) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  }
  char buf[384];  // |v| can be ~1e308: 309 integer digits + point + 16
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string format_row(const RealVector& row, char delimiter, int precision) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j > 0) {
      out.push_back(delimiter);
    }
    out += format_value(row[j], precision);
  }
  return out;
}

std::string format_table(const MatrixTable& m, char delimiter, int precision) {
  std::string out;
  for (const RealVector& row : m.rows) {
    out += format_row(row, delimiter, precision);
    out.push_back('\n');
  }
  return out;
}

}  // namespace simproj::io

// Copyright 2026 The semg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semg::io {

// Malformed input. line and column are 1-based; column counts CSV fields.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// 17 significant digits; non-finite values as inf, -inf, nan.
std::string format_double(double v);

// Accepts the output of format_double. Throws ParseError.
double parse_double(std::string_view text, const std::string& source, std::size_t line,
                    std::size_t column);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;  // source line of each row
};

// Comma-separated fields, surrounding whitespace trimmed, blank lines
// skipped. Every row must have as many fields as the header.
CsvTable parse_csv(std::string_view text, const std::string& source = "<input>");

// Two columns with header (typically x,p).
struct LabeledVector {
  std::vector<std::string> ids;
  std::vector<double> values;
};
LabeledVector parse_labeled_vector(std::string_view text, const std::string& source = "<input>");
std::string write_labeled_vector(const LabeledVector& v, const std::string& id_header = "x",
                                 const std::string& value_header = "p");

// Header row of column ids after a corner cell, then one row per row id.
struct LabeledMatrix {
  std::string corner = "x";
  std::vector<std::string> row_ids;
  std::vector<std::string> col_ids;
  std::vector<double> values;  // row-major

  std::size_t rows() const noexcept { return row_ids.size(); }
  std::size_t cols() const noexcept { return col_ids.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * col_ids.size() + j]; }
};
LabeledMatrix parse_labeled_matrix(std::string_view text, const std::string& source = "<input>");
std::string write_labeled_matrix(const LabeledMatrix& m);

// Incremental writer for numeric tables such as curves and traces.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);
  CsvWriter& row(const std::vector<double>& values);
  CsvWriter& row(const std::vector<std::string>& fields);
  const std::string& str() const noexcept { return out_; }

 private:
  std::size_t width_;
  std::string out_;
};

std::string read_file(const std::string& path);
// Writes through a temporary file and renames it into place.
void write_file(const std::string& path, const std::string& content);

// "0.25:4:0.25" (start:stop:step, inclusive) or "1,5,40".
std::vector<double> parse_number_list(std::string_view text, const std::string& what);

}  // namespace semg::io

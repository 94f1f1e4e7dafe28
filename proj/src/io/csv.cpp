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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "semg/io/csv.hpp"

namespace semg::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void check_unique(const std::vector<std::string>& ids, const std::string& source,
                  const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (id.empty()) throw ParseError(source, 1, 1, std::string("empty ") + what + " identifier");
    if (!seen.insert(id).second)
      throw ParseError(source, 1, 1, std::string("duplicate ") + what + " identifier '" + id + "'");
  }
}

}  // namespace

CsvTable parse_csv(std::string_view text, const std::string& source) {
  CsvTable t;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw ParseError(source, line_no, std::min(fields.size(), t.header.size()) + 1,
                       "expected " + std::to_string(t.header.size()) + " fields, found " +
                           std::to_string(fields.size()));
    }
    t.rows.push_back(std::move(fields));
    t.row_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(source, 1, 1, "missing header row");
  return t;
}

LabeledVector parse_labeled_vector(std::string_view text, const std::string& source) {
  const auto t = parse_csv(text, source);
  if (t.header.size() != 2)
    throw ParseError(source, 1, 1, "expected two columns (id,value)");
  if (t.rows.empty()) throw ParseError(source, 2, 1, "no data rows");
  LabeledVector v;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    v.ids.push_back(t.rows[r][0]);
    v.values.push_back(parse_double(t.rows[r][1], source, t.row_lines[r], 2));
  }
  check_unique(v.ids, source, "row");
  return v;
}

std::string write_labeled_vector(const LabeledVector& v, const std::string& id_header,
                                 const std::string& value_header) {
  std::string out = id_header + "," + value_header + "\n";
  for (std::size_t i = 0; i < v.ids.size(); ++i)
    out += v.ids[i] + "," + format_double(v.values[i]) + "\n";
  return out;
}

LabeledMatrix parse_labeled_matrix(std::string_view text, const std::string& source) {
  const auto t = parse_csv(text, source);
  if (t.header.size() < 2) throw ParseError(source, 1, 2, "expected at least one column id");
  if (t.rows.empty()) throw ParseError(source, 2, 1, "no data rows");
  LabeledMatrix m;
  m.corner = t.header[0];
  m.col_ids.assign(t.header.begin() + 1, t.header.end());
  check_unique(m.col_ids, source, "column");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    m.row_ids.push_back(t.rows[r][0]);
    for (std::size_t c = 1; c < t.rows[r].size(); ++c)
      m.values.push_back(parse_double(t.rows[r][c], source, t.row_lines[r], c + 1));
  }
  check_unique(m.row_ids, source, "row");
  return m;
}

std::string write_labeled_matrix(const LabeledMatrix& m) {
  std::string out = m.corner;
  for (const auto& c : m.col_ids) out += "," + c;
  out += "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += m.row_ids[i];
    for (std::size_t j = 0; j < m.cols(); ++j) out += "," + format_double(m.at(i, j));
    out += "\n";
  }
  return out;
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) : width_(header.size()) {
  row(header);
}

CsvWriter& CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> fields;
  fields.reserve(values.size());
  for (double v : values) fields.push_back(format_double(v));
  return row(fields);
}

CsvWriter& CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw std::logic_error("CSV row width does not match header");
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out_ += ',';
    out_ += fields[k];
  }
  out_ += '\n';
  return *this;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
  }
  std::filesystem::rename(tmp, target);
}

std::vector<double> parse_number_list(std::string_view text, const std::string& what) {
  const std::string src = "--" + what;
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t start = 0, col = 1;
    while (true) {
      const auto colon = text.find(':', start);
      parts.push_back(parse_double(trim(text.substr(start, colon - start)), src, 1, col++));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    if (parts.size() != 3) throw ParseError(src, 1, 1, "range must be start:stop:step");
    const double a = parts[0], b = parts[1], step = parts[2];
    if (!(step > 0.0) || b < a) throw ParseError(src, 1, 3, "range needs step > 0 and stop >= start");
    const auto n = static_cast<long long>(std::floor((b - a) / step + 1e-9));
    if (n > 1000000) throw ParseError(src, 1, 3, "range has too many points");
    for (long long k = 0; k <= n; ++k) out.push_back(a + static_cast<double>(k) * step);
    return out;
  }
  std::size_t start = 0, col = 1;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(trim(text.substr(start, comma - start)), src, 1, col++));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace semg::io

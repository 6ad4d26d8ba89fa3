// Copyright 2026 The Predclass Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PREDCLASS_CSV_HPP_
#define PREDCLASS_CSV_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "predclass/data.hpp"
#include "predclass/error.hpp"

namespace predclass {

// A table read from CSV: features, optional labels and the header names of
// the feature columns.
struct LabeledTable {
  FeatureTable table;
  std::optional<Labeling> labels;
  std::vector<std::string> header;
};

enum class LabelColumn {
  kAbsent,
  kPresent,
  kDetect,  // present exactly when the last header cell is "label"
};

namespace csv_internal {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

inline std::uint32_t parse_code(std::string_view cell, std::size_t row,
                                std::size_t column) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() ||
      v == 0) {
    throw ParseError("expected a positive integer, got '" + std::string(cell) +
                         "'",
                     row, column);
  }
  return v;
}

}  // namespace csv_internal

// Reads comma-separated integer codes with a header row. Rows are numbered
// from 1 at the header, so the first data row is row 2. When labels are
// present, k is the largest label unless `class_count` is given.
inline LabeledTable read_table(std::istream& in, LabelColumn label_column,
                               std::optional<std::uint32_t> class_count = {}) {
  std::string line;
  std::size_t row = 0;
  bool have_header = false;
  std::vector<std::string_view> header_cells;
  std::string header_line;
  while (std::getline(in, line)) {
    ++row;
    if (csv_internal::trim(line).empty()) continue;
    header_line = line;
    have_header = true;
    break;
  }
  if (!have_header) throw EmptyInputError("input is empty");
  header_cells = csv_internal::split(header_line);
  bool labeled = label_column == LabelColumn::kPresent;
  if (label_column == LabelColumn::kDetect) {
    labeled = header_cells.back() == "label";
  }
  if (labeled && header_cells.back() != "label") {
    throw ParseError("last header column must be 'label'", row,
                     header_cells.size());
  }
  const std::size_t width = header_cells.size();
  const std::size_t d = labeled ? width - 1 : width;
  if (d == 0) throw ParseError("no feature columns", row);

  LabeledTable out;
  out.table = FeatureTable(d);
  for (std::size_t j = 0; j < d; ++j) out.header.emplace_back(header_cells[j]);
  std::vector<std::uint32_t> labels;
  std::vector<std::uint32_t> cells(d);
  while (std::getline(in, line)) {
    ++row;
    if (csv_internal::trim(line).empty()) continue;
    const auto parts = csv_internal::split(line);
    if (parts.size() != width) {
      throw ShapeError("row has " + std::to_string(parts.size()) +
                           " cells, header has " + std::to_string(width),
                       row);
    }
    for (std::size_t j = 0; j < d; ++j) {
      cells[j] = csv_internal::parse_code(parts[j], row, j + 1);
    }
    out.table.add_row(cells);
    if (labeled) labels.push_back(csv_internal::parse_code(parts[d], row, width));
  }
  if (labeled) {
    std::uint32_t k = 1;
    for (std::uint32_t c : labels) k = std::max(k, c);
    if (class_count) {
      if (k > *class_count) {
        throw ParseError("label " + std::to_string(k) + " exceeds class count " +
                         std::to_string(*class_count));
      }
      k = *class_count;
    }
    out.labels = Labeling(std::move(labels), k);
  }
  return out;
}

inline LabeledTable ingest_table(const std::string& path,
                                 LabelColumn label_column,
                                 std::optional<std::uint32_t> class_count = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_table(in, label_column, class_count);
}

// Writes the table (and labels, as a final "label" column) in the format
// read_table accepts. Missing header names default to x1..xd.
inline void write_table(std::ostream& out, const FeatureTable& table,
                        const Labeling* labels = nullptr,
                        const std::vector<std::string>& header = {}) {
  const std::size_t d = table.feature_count();
  for (std::size_t j = 0; j < d; ++j) {
    if (j) out << ',';
    out << (j < header.size() ? header[j] : "x" + std::to_string(j + 1));
  }
  if (labels) out << ",label";
  out << '\n';
  for (std::size_t i = 0; i < table.item_count(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (j) out << ',';
      out << table.at(i, j);
    }
    if (labels) out << ',' << (*labels)[i];
    out << '\n';
  }
}

inline void write_table(const std::string& path, const FeatureTable& table,
                        const Labeling* labels = nullptr,
                        const std::vector<std::string>& header = {}) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  write_table(out, table, labels, header);
}

}  // namespace predclass

#endif  // PREDCLASS_CSV_HPP_

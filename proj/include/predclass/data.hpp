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

#ifndef PREDCLASS_DATA_HPP_
#define PREDCLASS_DATA_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "predclass/error.hpp"

namespace predclass {

// Items-by-features matrix of positive integer category codes, stored row
// major. Every row has the same number of features d >= 1; a table with no
// rows still carries its d.
class FeatureTable {
 public:
  FeatureTable() = default;

  // An empty table with `feature_count` columns.
  explicit FeatureTable(std::size_t feature_count) : d_(feature_count) {
    if (d_ == 0) throw DomainError("FeatureTable: feature count must be >= 1");
  }

  // Builds from nested rows. All rows must have the same length.
  FeatureTable(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    for (const auto& row : rows) add_row(std::vector<std::uint32_t>(row));
  }

  static FeatureTable from_rows(
      const std::vector<std::vector<std::uint32_t>>& rows,
      std::size_t feature_count = 0) {
    FeatureTable t;
    t.d_ = feature_count;
    for (const auto& row : rows) t.add_row(row);
    if (t.d_ == 0) throw DomainError("FeatureTable: feature count unknown");
    return t;
  }

  void add_row(std::span<const std::uint32_t> row) {
    if (d_ == 0) {
      if (row.empty()) throw DomainError("FeatureTable: empty row");
      d_ = row.size();
    }
    if (row.size() != d_) {
      throw PairingError("FeatureTable: row of length " +
                         std::to_string(row.size()) + ", expected " +
                         std::to_string(d_));
    }
    for (std::uint32_t v : row) {
      if (v == 0) throw DomainError("FeatureTable: category codes start at 1");
    }
    cells_.insert(cells_.end(), row.begin(), row.end());
    ++n_;
  }
  void add_row(const std::vector<std::uint32_t>& row) {
    add_row(std::span<const std::uint32_t>(row));
  }

  std::size_t item_count() const { return n_; }
  std::size_t feature_count() const { return d_; }
  bool empty() const { return n_ == 0; }

  // 0-based item and feature.
  std::uint32_t at(std::size_t item, std::size_t feature) const {
    return cells_[item * d_ + feature];
  }
  std::span<const std::uint32_t> row(std::size_t item) const {
    return {cells_.data() + item * d_, d_};
  }

  // Largest code seen in the 0-based column `feature`, 0 if there are no rows.
  std::uint32_t max_code(std::size_t feature) const {
    std::uint32_t hi = 0;
    for (std::size_t i = 0; i < n_; ++i) hi = std::max(hi, at(i, feature));
    return hi;
  }

  FeatureTable subset(std::span<const std::size_t> items) const {
    FeatureTable out(d_ == 0 ? 1 : d_);
    for (std::size_t i : items) out.add_row(row(i));
    return out;
  }

  friend bool operator==(const FeatureTable&, const FeatureTable&) = default;

 private:
  std::size_t d_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> cells_;
};

// Class assignments 1..k for a sequence of items. Classes may be empty.
class Labeling {
 public:
  Labeling() = default;
  Labeling(std::vector<std::uint32_t> labels, std::uint32_t class_count)
      : labels_(std::move(labels)), k_(class_count) {
    if (k_ == 0) throw DomainError("Labeling: class count must be >= 1");
    for (std::uint32_t c : labels_) {
      if (c < 1 || c > k_) {
        throw IndexError("Labeling: label " + std::to_string(c) +
                         " outside 1.." + std::to_string(k_));
      }
    }
  }

  std::size_t size() const { return labels_.size(); }
  std::uint32_t class_count() const { return k_; }
  std::uint32_t operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }

  // Number of items assigned to each class, indexed 0..k-1.
  std::vector<std::uint64_t> class_sizes() const {
    std::vector<std::uint64_t> sizes(k_, 0);
    for (std::uint32_t c : labels_) ++sizes[c - 1];
    return sizes;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(labels_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling& a, const Labeling& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<std::uint32_t> labels_;
  std::uint32_t k_ = 1;
};

}  // namespace predclass

#endif  // PREDCLASS_DATA_HPP_

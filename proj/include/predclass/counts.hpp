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

#ifndef PREDCLASS_COUNTS_HPP_
#define PREDCLASS_COUNTS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "predclass/data.hpp"
#include "predclass/error.hpp"

namespace predclass {

// Per (class, feature) frequency counts of observed value codes, plus the
// number of items in each class. Value codes are kept sparse since the
// partition model has unbounded alphabets. All indices are 1-based.
class CountTensor {
 public:
  using Cell = std::map<std::uint32_t, std::uint64_t>;

  CountTensor() = default;
  CountTensor(std::uint32_t class_count, std::size_t feature_count)
      : k_(class_count),
        d_(feature_count),
        cells_(static_cast<std::size_t>(class_count) * feature_count),
        class_sizes_(class_count, 0) {}

  std::uint32_t class_count() const { return k_; }
  std::size_t feature_count() const { return d_; }

  // Adds one item with value codes `row` to class `c`.
  void add_item(std::uint32_t c, std::span<const std::uint32_t> row) {
    check_class(c);
    if (row.size() != d_) {
      throw PairingError("CountTensor: item has " + std::to_string(row.size()) +
                         " features, expected " + std::to_string(d_));
    }
    for (std::size_t j = 0; j < d_; ++j) ++cells_[index(c, j + 1)][row[j]];
    ++class_sizes_[c - 1];
  }

  // Removes an item previously added with add_item.
  void remove_item(std::uint32_t c, std::span<const std::uint32_t> row) {
    check_class(c);
    for (std::size_t j = 0; j < d_; ++j) {
      Cell& cell = cells_[index(c, j + 1)];
      auto it = cell.find(row[j]);
      if (it == cell.end()) {
        throw InconsistentStatistics("CountTensor: removing an absent value");
      }
      if (--it->second == 0) cell.erase(it);
    }
    --class_sizes_[c - 1];
  }

  std::uint64_t count(std::uint32_t c, std::size_t j, std::uint32_t l) const {
    const Cell& cell = this->cell(c, j);
    auto it = cell.find(l);
    return it == cell.end() ? 0 : it->second;
  }

  // Nonzero counts for (c, j), keyed by value code.
  const Cell& cell(std::uint32_t c, std::size_t j) const {
    check_class(c);
    check_feature(j);
    return cells_[index(c, j)];
  }

  std::uint64_t class_size(std::uint32_t c) const {
    check_class(c);
    return class_sizes_[c - 1];
  }
  const std::vector<std::uint64_t>& class_sizes() const { return class_sizes_; }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (std::uint64_t s : class_sizes_) t += s;
    return t;
  }

  // Largest value code observed for feature j in any class, 0 if none.
  std::uint32_t max_code(std::size_t j) const {
    std::uint32_t hi = 0;
    for (std::uint32_t c = 1; c <= k_; ++c) {
      const Cell& cl = cell(c, j);
      if (!cl.empty()) hi = std::max(hi, cl.rbegin()->first);
    }
    return hi;
  }

  CountTensor& operator+=(const CountTensor& o) {
    if (o.k_ != k_ || o.d_ != d_) {
      throw PairingError("CountTensor: adding tensors of different shape");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      for (const auto& [l, n] : o.cells_[i]) cells_[i][l] += n;
    }
    for (std::uint32_t c = 0; c < k_; ++c) class_sizes_[c] += o.class_sizes_[c];
    return *this;
  }
  friend CountTensor operator+(CountTensor a, const CountTensor& b) {
    return a += b;
  }

  friend bool operator==(const CountTensor&, const CountTensor&) = default;

 private:
  std::size_t index(std::uint32_t c, std::size_t j) const {
    return static_cast<std::size_t>(c - 1) * d_ + (j - 1);
  }
  void check_class(std::uint32_t c) const {
    if (c < 1 || c > k_) {
      throw IndexError("class " + std::to_string(c) + " outside 1.." +
                       std::to_string(k_));
    }
  }
  void check_feature(std::size_t j) const {
    if (j < 1 || j > d_) {
      throw IndexError("feature " + std::to_string(j) + " outside 1.." +
                       std::to_string(d_));
    }
  }

  std::uint32_t k_ = 0;
  std::size_t d_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::uint64_t> class_sizes_;
};

// Tallies n_cjl: the number of items with label c whose feature j equals l.
inline CountTensor count_frequencies(const FeatureTable& data,
                                     const Labeling& labels) {
  if (data.item_count() != labels.size()) {
    throw PairingError("count_frequencies: " +
                       std::to_string(data.item_count()) + " items but " +
                       std::to_string(labels.size()) + " labels");
  }
  CountTensor t(labels.class_count(), data.feature_count());
  for (std::size_t i = 0; i < data.item_count(); ++i) {
    t.add_item(labels[i], data.row(i));
  }
  return t;
}

// Count tensor holding the single item `row` in class c.
inline CountTensor one_item_tensor(std::span<const std::uint32_t> row,
                                   std::uint32_t c, std::uint32_t class_count) {
  CountTensor t(class_count, row.size());
  t.add_item(c, row);
  return t;
}

}  // namespace predclass

#endif  // PREDCLASS_COUNTS_HPP_

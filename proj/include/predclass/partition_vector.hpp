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

#ifndef PREDCLASS_PARTITION_VECTOR_HPP_
#define PREDCLASS_PARTITION_VECTOR_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "predclass/counts.hpp"
#include "predclass/error.hpp"

namespace predclass {

// Frequencies of frequencies: rho(t) is the number of distinct values seen
// exactly t times. Only nonzero entries are stored; values never seen are not
// represented.
class PartitionVector {
 public:
  PartitionVector() = default;

  // Builds from (t, rho_t) pairs; zero entries are dropped. Throws if the
  // stated total disagrees with sum t * rho_t.
  PartitionVector(std::map<std::uint64_t, std::uint64_t> rho,
                  std::uint64_t total)
      : total_(total) {
    std::uint64_t sum = 0;
    for (const auto& [t, r] : rho) {
      if (t == 0) throw InconsistentStatistics("PartitionVector: t must be >= 1");
      if (r == 0) continue;
      rho_[t] = r;
      sum += t * r;
    }
    if (sum != total_) {
      throw InconsistentStatistics(
          "PartitionVector: sum of t*rho_t is " + std::to_string(sum) +
          " but total is " + std::to_string(total_));
    }
  }

  // Partition vector of a frequency cell.
  static PartitionVector from_counts(const CountTensor::Cell& cell) {
    PartitionVector p;
    for (const auto& [l, n] : cell) {
      if (n == 0) continue;
      ++p.rho_[n];
      p.total_ += n;
    }
    return p;
  }

  std::uint64_t operator[](std::uint64_t t) const {
    auto it = rho_.find(t);
    return it == rho_.end() ? 0 : it->second;
  }
  const std::map<std::uint64_t, std::uint64_t>& entries() const { return rho_; }
  std::uint64_t total() const { return total_; }
  // Largest t with rho(t) > 0, 0 when empty.
  std::uint64_t support_size() const {
    return rho_.empty() ? 0 : rho_.rbegin()->first;
  }
  // Number of distinct values observed.
  std::uint64_t distinct() const {
    std::uint64_t s = 0;
    for (const auto& [t, r] : rho_) s += r;
    return s;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [t, r] : rho_) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(t) + ":" + std::to_string(r);
    }
    return s + "}";
  }

  friend bool operator==(const PartitionVector&, const PartitionVector&) =
      default;

 private:
  friend PartitionVector update_partition_vector_one_item(
      const PartitionVector& rho, std::uint64_t t_observed);

  std::map<std::uint64_t, std::uint64_t> rho_;
  std::uint64_t total_ = 0;
};

inline PartitionVector partition_vector(const CountTensor& counts,
                                        std::uint32_t c, std::size_t j) {
  return PartitionVector::from_counts(counts.cell(c, j));
}

// Partition vector of the summed train + test counts in cell (c, j).
inline PartitionVector combined_partition_vector(const CountTensor& train,
                                                 const CountTensor& test,
                                                 std::uint32_t c,
                                                 std::size_t j) {
  if (train.class_count() != test.class_count() ||
      train.feature_count() != test.feature_count()) {
    throw PairingError("combined_partition_vector: tensors differ in shape");
  }
  CountTensor::Cell merged = train.cell(c, j);
  for (const auto& [l, n] : test.cell(c, j)) merged[l] += n;
  return PartitionVector::from_counts(merged);
}

// Adds one observation of a value previously seen t_observed times
// (0 for a value not seen before).
inline PartitionVector update_partition_vector_one_item(
    const PartitionVector& rho, std::uint64_t t_observed) {
  PartitionVector out = rho;
  if (t_observed > 0) {
    auto it = out.rho_.find(t_observed);
    if (it == out.rho_.end()) {
      throw InconsistentStatistics(
          "update_partition_vector_one_item: no value seen " +
          std::to_string(t_observed) + " times");
    }
    if (--it->second == 0) out.rho_.erase(it);
  }
  ++out.rho_[t_observed + 1];
  ++out.total_;
  return out;
}

}  // namespace predclass

#endif  // PREDCLASS_PARTITION_VECTOR_HPP_

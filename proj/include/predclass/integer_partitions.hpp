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

#ifndef PREDCLASS_INTEGER_PARTITIONS_HPP_
#define PREDCLASS_INTEGER_PARTITIONS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "predclass/partition_vector.hpp"

namespace predclass {

// Calls `visit` once for every integer partition of n, expressed as a
// partition vector. Partitions are generated in reverse lexicographic order
// of their parts (n, n-1+1, ...). n = 0 yields the single empty partition.
inline void for_each_integer_partition(
    std::uint64_t n, const std::function<void(const PartitionVector&)>& visit) {
  std::vector<std::uint64_t> parts;
  std::function<void(std::uint64_t, std::uint64_t)> rec =
      [&](std::uint64_t remaining, std::uint64_t max_part) {
        if (remaining == 0) {
          std::map<std::uint64_t, std::uint64_t> rho;
          for (std::uint64_t p : parts) ++rho[p];
          visit(PartitionVector(std::move(rho), n));
          return;
        }
        for (std::uint64_t p = std::min(remaining, max_part); p >= 1; --p) {
          parts.push_back(p);
          rec(remaining - p, p);
          parts.pop_back();
        }
      };
  rec(n, n);
}

inline std::vector<PartitionVector> integer_partitions(std::uint64_t n) {
  std::vector<PartitionVector> out;
  for_each_integer_partition(
      n, [&](const PartitionVector& p) { out.push_back(p); });
  return out;
}

}  // namespace predclass

#endif  // PREDCLASS_INTEGER_PARTITIONS_HPP_

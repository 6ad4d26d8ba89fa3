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

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "predclass/counts.hpp"
#include "predclass/data.hpp"
#include "predclass/error.hpp"
#include "predclass/log_prob.hpp"
#include "predclass/partition_vector.hpp"
#include "predclass/random.hpp"
#include "tests/support/example_data.hpp"

namespace predclass {
namespace {

using ::predclass::testing::small_test;
using ::predclass::testing::small_train;
using ::predclass::testing::small_train_labels;

TEST(FeatureTableTest, RejectsRaggedRowsAndZeroCodes) {
  FeatureTable t(2);
  t.add_row(std::vector<std::uint32_t>{1, 2});
  EXPECT_THROW(t.add_row(std::vector<std::uint32_t>{1}), PairingError);
  EXPECT_THROW(t.add_row(std::vector<std::uint32_t>{0, 1}), DomainError);
  EXPECT_EQ(t.item_count(), 1u);
  EXPECT_EQ(t.feature_count(), 2u);
}

TEST(LabelingTest, RejectsLabelsOutsideRange) {
  EXPECT_THROW(Labeling({1, 3}, 2), IndexError);
  EXPECT_THROW(Labeling({0}, 2), IndexError);
  const Labeling s({2, 2}, 3);
  EXPECT_EQ(s.class_sizes(), (std::vector<std::uint64_t>{0, 2, 0}));
}

TEST(CountFrequenciesTest, TrainingFeatureOneOfClassOne) {
  const CountTensor t = count_frequencies(small_train(), small_train_labels());
  EXPECT_EQ(t.count(1, 1, 1), 2u);
  EXPECT_EQ(t.count(1, 1, 2), 1u);
  EXPECT_EQ(t.count(1, 1, 3), 2u);
  EXPECT_EQ(t.class_size(1), 5u);
  EXPECT_EQ(t.class_size(2), 5u);
}

TEST(CountFrequenciesTest, EmptyInputGivesZeroTensor) {
  const CountTensor t = count_frequencies(FeatureTable(3), Labeling({}, 2));
  EXPECT_EQ(t.class_sizes(), (std::vector<std::uint64_t>{0, 0}));
  EXPECT_TRUE(t.cell(1, 1).empty());
  EXPECT_EQ(t.total(), 0u);
}

TEST(CountFrequenciesTest, TestItemsAllInClassOne) {
  const CountTensor t =
      count_frequencies(small_test(), Labeling({1, 1, 1}, 2));
  EXPECT_EQ(t.count(1, 4, 1), 3u);
  EXPECT_EQ(t.count(1, 4, 2), 0u);
  EXPECT_EQ(t.count(1, 4, 3), 0u);
}

TEST(CountFrequenciesTest, LengthMismatchIsPairingError) {
  EXPECT_THROW(count_frequencies(small_test(), Labeling({1, 2}, 2)),
               PairingError);
}

TEST(CountFrequenciesTest, CellSumsEqualClassSizes) {
  const CountTensor t = count_frequencies(small_train(), small_train_labels());
  for (std::uint32_t c = 1; c <= 2; ++c) {
    for (std::size_t j = 1; j <= 4; ++j) {
      std::uint64_t sum = 0;
      for (const auto& [l, n] : t.cell(c, j)) sum += n;
      EXPECT_EQ(sum, t.class_size(c));
    }
  }
}

TEST(PartitionVectorTest, TrainingCellOfClassOneFeatureOne) {
  const CountTensor t = count_frequencies(small_train(), small_train_labels());
  const PartitionVector p = partition_vector(t, 1, 1);
  EXPECT_EQ(p[1], 1u);
  EXPECT_EQ(p[2], 2u);
  EXPECT_EQ(p[3], 0u);
  EXPECT_EQ(p.total(), 5u);
  EXPECT_EQ(p.support_size(), 2u);
}

TEST(PartitionVectorTest, EmptyCell) {
  const CountTensor t(1, 1);
  const PartitionVector p = partition_vector(t, 1, 1);
  EXPECT_TRUE(p.entries().empty());
  EXPECT_EQ(p.total(), 0u);
}

TEST(PartitionVectorTest, SpeciesCountsExample) {
  // Counts (3,3,1,0,2,1) over six categories, N = 10.
  CountTensor::Cell cell{{1, 3}, {2, 3}, {3, 1}, {5, 2}, {6, 1}};
  const PartitionVector p = PartitionVector::from_counts(cell);
  EXPECT_EQ(p.entries(),
            (std::map<std::uint64_t, std::uint64_t>{{1, 2}, {2, 1}, {3, 2}}));
  EXPECT_EQ(p.total(), 10u);
}

TEST(PartitionVectorTest, OutOfRangeCellIsIndexError) {
  const CountTensor t(2, 2);
  EXPECT_THROW(partition_vector(t, 3, 1), IndexError);
  EXPECT_THROW(partition_vector(t, 1, 0), IndexError);
}

TEST(PartitionVectorTest, InconsistentTotalRejected) {
  EXPECT_THROW(PartitionVector({{2, 1}}, 3), InconsistentStatistics);
}

TEST(CombinedPartitionVectorTest, NovelTestSetClassOneFeatureOne) {
  const CountTensor train =
      count_frequencies(small_train(), small_train_labels());
  const CountTensor test = count_frequencies(testing::novel_test(),
                                             testing::novel_test_labels());
  const PartitionVector p = combined_partition_vector(train, test, 1, 1);
  EXPECT_EQ(p.entries(),
            (std::map<std::uint64_t, std::uint64_t>{{2, 2}, {6, 1}}));
  EXPECT_EQ(p.total(), 10u);
}

TEST(CombinedPartitionVectorTest, ZeroTestTensorIsIdentity) {
  const CountTensor train =
      count_frequencies(small_train(), small_train_labels());
  const CountTensor zero(2, 4);
  for (std::uint32_t c = 1; c <= 2; ++c) {
    for (std::size_t j = 1; j <= 4; ++j) {
      EXPECT_EQ(combined_partition_vector(train, zero, c, j),
                partition_vector(train, c, j));
    }
  }
}

TEST(CombinedPartitionVectorTest, ShapeMismatchIsPairingError) {
  EXPECT_THROW(combined_partition_vector(CountTensor(2, 2), CountTensor(2, 3),
                                         1, 1),
               PairingError);
}

TEST(CombinedPartitionVectorTest, MatchesElementwiseSumOnRandomTensors) {
  Rng rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    const std::uint32_t k = 1 + rng.below(3);
    const std::size_t d = 1 + rng.below(3);
    CountTensor a(k, d), b(k, d);
    // Brute-force sum kept separately in a plain map.
    std::map<std::tuple<std::uint32_t, std::size_t, std::uint32_t>,
             std::uint64_t>
        sum;
    for (CountTensor* t : {&a, &b}) {
      const std::size_t items = rng.below(8);
      for (std::size_t i = 0; i < items; ++i) {
        const auto c = static_cast<std::uint32_t>(1 + rng.below(k));
        std::vector<std::uint32_t> row(d);
        for (std::size_t j = 0; j < d; ++j) {
          row[j] = static_cast<std::uint32_t>(1 + rng.below(5));
          ++sum[{c, j + 1, row[j]}];
        }
        t->add_item(c, row);
      }
    }
    for (std::uint32_t c = 1; c <= k; ++c) {
      for (std::size_t j = 1; j <= d; ++j) {
        std::map<std::uint64_t, std::uint64_t> rho;
        std::uint64_t total = 0;
        for (const auto& [key, n] : sum) {
          if (std::get<0>(key) == c && std::get<1>(key) == j) {
            ++rho[n];
            total += n;
          }
        }
        EXPECT_EQ(combined_partition_vector(a, b, c, j),
                  PartitionVector(rho, total));
      }
    }
  }
}

TEST(UpdatePartitionVectorTest, UnseenValueAddsSingleton) {
  const PartitionVector rho({{1, 1}, {2, 2}}, 5);
  const PartitionVector out = update_partition_vector_one_item(rho, 0);
  EXPECT_EQ(out, PartitionVector({{1, 2}, {2, 2}}, 6));
}

TEST(UpdatePartitionVectorTest, SeenValueMovesUp) {
  const PartitionVector rho({{2, 1}}, 2);
  EXPECT_EQ(update_partition_vector_one_item(rho, 2),
            PartitionVector({{3, 1}}, 3));
}

TEST(UpdatePartitionVectorTest, MissingFrequencyIsInconsistent) {
  const PartitionVector rho({{2, 1}}, 2);
  EXPECT_THROW(update_partition_vector_one_item(rho, 1),
               InconsistentStatistics);
}

TEST(UpdatePartitionVectorTest, MatchesOneItemTensorOnRandomCells) {
  Rng rng(12);
  for (int rep = 0; rep < 200; ++rep) {
    CountTensor train(1, 1);
    const std::size_t items = rng.below(12);
    for (std::size_t i = 0; i < items; ++i) {
      train.add_item(1, std::vector<std::uint32_t>{
                            static_cast<std::uint32_t>(1 + rng.below(6))});
    }
    const auto value = static_cast<std::uint32_t>(1 + rng.below(8));
    const CountTensor one = one_item_tensor(std::vector<std::uint32_t>{value}, 1, 1);
    EXPECT_EQ(update_partition_vector_one_item(partition_vector(train, 1, 1),
                                               train.count(1, 1, value)),
              combined_partition_vector(train, one, 1, 1));
  }
}

TEST(LogRisingFactorialTest, EmptyProductIsZero) {
  EXPECT_EQ(log_rising_factorial(5.0, 0), 0.0);
}

TEST(LogRisingFactorialTest, FactorialOfFour) {
  EXPECT_NEAR(log_rising_factorial(1.0, 4), std::log(24.0), 1e-15);
}

TEST(LogRisingFactorialTest, MatchesDirectProduct) {
  EXPECT_NEAR(log_rising_factorial(2.5, 3), std::log(2.5 * 3.5 * 4.5), 1e-14);
  for (double x : {0.1, 1.0, 2.5, 17.25, 100.0}) {
    for (std::uint64_t n : {1u, 7u, 50u, 100u}) {
      long double prod = 1.0L;
      for (std::uint64_t i = 0; i < n; ++i) prod *= x + i;
      const double expected = static_cast<double>(std::log(prod));
      EXPECT_NEAR(log_rising_factorial(x, n), expected,
                  1e-12 * std::abs(expected))
          << "x=" << x << " n=" << n;
    }
  }
}

TEST(LogRisingFactorialTest, NonPositiveArgumentIsDomainError) {
  EXPECT_THROW(log_rising_factorial(0.0, 2), DomainError);
  EXPECT_THROW(log_rising_factorial(-1.0, 2), DomainError);
}

TEST(LogSumExpTest, StableForLargeMagnitudes) {
  const std::vector<double> v{-1000.0, -1000.0};
  EXPECT_NEAR(log_sum_exp(v), -1000.0 + std::log(2.0), 1e-12);
  const std::vector<double> none{-INFINITY, -INFINITY};
  EXPECT_EQ(log_sum_exp(none), -INFINITY);
}

TEST(NormalizeLogTest, ExponentiatedValuesSumToOne) {
  std::vector<double> w{-3.0, -1.0, -7.5, 2.0};
  normalize_log(w);
  double sum = 0.0;
  for (double v : w) {
    EXPECT_LE(v, 0.0);
    sum += std::exp(v);
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

}  // namespace
}  // namespace predclass

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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "predclass/counts.hpp"
#include "predclass/error.hpp"
#include "predclass/finite_model.hpp"
#include "predclass/random.hpp"
#include "predclass/structures.hpp"
#include "tests/support/example_data.hpp"
#include "tests/support/random_instances.hpp"
#include "tests/support/rational_oracle.hpp"

namespace predclass {
namespace {

using ::predclass::testing::kReferenceMarginalSums;
using ::predclass::testing::kReferencePredictive;
using ::predclass::testing::kReferencePrior;
using ::predclass::testing::kReferenceProduct;
using ::predclass::testing::small_test;
using ::predclass::testing::small_train;
using ::predclass::testing::small_train_labels;

double RelErr(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

CountTensor TestCounts(const Labeling& s) {
  return count_frequencies(small_test(), s);
}

CountTensor TrainCounts() {
  return count_frequencies(small_train(), small_train_labels());
}

oracle::FiniteSpec ExampleSpec() {
  return {{1, 1, 1, 1}, {3, 3, 3, 3}, {1, 1}};
}

TEST(LogPredictiveFiniteTest, StructureThreeOfTheSmallExample) {
  const double p = std::exp(
      log_predictive_finite(TestCounts(Labeling({1, 2, 1}, 2)), TrainCounts(),
                            FiniteModelConfig::example_3_2())
          .value());
  EXPECT_LT(RelErr(p, 1.695421e-6), 1e-3);
}

TEST(LogPredictiveFiniteTest, AgreesWithReferenceTableWhereReproducible) {
  // Entries 1, 2 and 5 of the reference column are not reproducible from the
  // data; see MatchesExactArithmeticOnEveryStructure for the exact values.
  const auto structures = enumerate_structures(3, 2);
  for (int s : {2, 3, 5, 6, 7}) {
    const double p = std::exp(
        log_predictive_finite(TestCounts(structures[s]), TrainCounts(),
                              FiniteModelConfig::example_3_2())
            .value());
    EXPECT_LT(RelErr(p, kReferencePredictive[s]), 1e-3) << "structure " << s + 1;
  }
}

TEST(LogPredictiveFiniteTest, MatchesExactArithmeticOnEveryStructure) {
  const auto structures = enumerate_structures(3, 2);
  const auto train = small_train();
  oracle::Rows train_rows, test_rows;
  for (std::size_t i = 0; i < train.item_count(); ++i) {
    train_rows.emplace_back(train.row(i).begin(), train.row(i).end());
  }
  const auto test = small_test();
  for (std::size_t i = 0; i < test.item_count(); ++i) {
    test_rows.emplace_back(test.row(i).begin(), test.row(i).end());
  }
  for (const Labeling& s : structures) {
    const double joint = oracle::to_double(
        oracle::finite_joint(train_rows, small_train_labels().labels(),
                             test_rows, s.labels(), 2, ExampleSpec()));
    const auto cfg = FiniteModelConfig::example_3_2();
    const double got =
        log_predictive_finite(TestCounts(s), TrainCounts(), cfg).value() +
        log_structure_prior(s, small_train_labels(), cfg).value();
    EXPECT_NEAR(got, std::log(joint), 1e-12) << s.to_string();
  }
}

TEST(LogPredictiveFiniteTest, EmptyTestTensorIsProbabilityOne) {
  EXPECT_EQ(log_predictive_finite(CountTensor(2, 4), TrainCounts(),
                                  FiniteModelConfig::example_3_2())
                .value(),
            0.0);
}

TEST(LogPredictiveFiniteTest, BinaryFeatureIsBetaBinomialSequence) {
  // One class, one binary feature, lambda = (a, b): an ordered sequence with
  // x ones among n has probability B(x + X + a, n - x + N - X + b) /
  // B(X + a, N - X + b) given X ones among N before it.
  const double a = 0.7, b = 2.3;
  FiniteModelConfig cfg;
  cfg.alphabet_sizes = {2};
  cfg.lambda_mode = FiniteModelConfig::LambdaMode::kExplicit;
  cfg.lambda_explicit = {{{a, b}}};
  CountTensor train(1, 1), test(1, 1);
  const std::vector<std::uint32_t> one{1}, two{2};
  for (int i = 0; i < 4; ++i) train.add_item(1, one);
  for (int i = 0; i < 3; ++i) train.add_item(1, two);
  for (int i = 0; i < 2; ++i) test.add_item(1, one);
  for (int i = 0; i < 5; ++i) test.add_item(1, two);
  auto log_beta = [](double p, double q) {
    return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
  };
  const double expected = log_beta(2 + 4 + a, 5 + 3 + b) - log_beta(4 + a, 3 + b);
  EXPECT_NEAR(log_predictive_finite(test, train, cfg).value(), expected, 1e-12);
}

TEST(LogPredictiveFiniteTest, CodeAboveAlphabetIsRejected) {
  CountTensor test(2, 4);
  test.add_item(1, std::vector<std::uint32_t>{4, 1, 1, 1});
  EXPECT_THROW(log_predictive_finite(test, TrainCounts(),
                                     FiniteModelConfig::example_3_2()),
               AlphabetViolation);
}

TEST(LogPredictiveFiniteTest, UniformLambdaUsesUnitTotal) {
  FiniteModelConfig cfg;
  cfg.alphabet_sizes = {4};
  EXPECT_DOUBLE_EQ(cfg.lambda(1, 1, 3), 0.25);
  EXPECT_DOUBLE_EQ(cfg.lambda_total(1, 1), 1.0);
  // A first observation in an empty class has probability 1/r.
  CountTensor train(1, 1), test(1, 1);
  test.add_item(1, std::vector<std::uint32_t>{2});
  EXPECT_NEAR(log_predictive_finite(test, train, cfg).value(), std::log(0.25),
              1e-15);
}

TEST(LogPredictiveFiniteTest, InfersAlphabetFromData) {
  FiniteModelConfig cfg;
  const auto r = resolve_alphabet(cfg, small_train(), testing::novel_test());
  EXPECT_EQ(r.alphabet_sizes, (std::vector<std::uint32_t>{7, 4, 5, 4}));
  cfg.infer_alphabet = false;
  EXPECT_THROW(resolve_alphabet(cfg, small_train(), small_test()), ConfigError);
}

TEST(LogStructurePriorTest, ThreeOverTwentySix) {
  const auto cfg = FiniteModelConfig::example_3_2();
  EXPECT_NEAR(
      std::exp(log_structure_prior(Labeling({1, 2, 1}, 2), small_train_labels(),
                                   cfg)
                   .value()),
      3.0 / 26.0, 1e-15);
  EXPECT_LT(RelErr(std::exp(log_structure_prior(Labeling({1, 1, 1}, 2),
                                                small_train_labels(), cfg)
                                .value()),
                   0.1538462),
            1e-5);
}

TEST(LogStructurePriorTest, MatchesReferenceColumn) {
  const auto structures = enumerate_structures(3, 2);
  for (int s = 0; s < 8; ++s) {
    const double b = std::exp(log_structure_prior(structures[s],
                                                  small_train_labels(),
                                                  FiniteModelConfig::example_3_2())
                                  .value());
    EXPECT_LT(RelErr(b, kReferencePrior[s]), 1e-6);
  }
}

TEST(LogStructurePriorTest, EmptyLabelingIsOne) {
  EXPECT_EQ(log_structure_prior(Labeling({}, 2), small_train_labels(),
                                FiniteModelConfig::example_3_2())
                .value(),
            0.0);
}

TEST(EnumerateStructuresTest, ThreeItemsTwoClassesInOrder) {
  const auto s = enumerate_structures(3, 2);
  ASSERT_EQ(s.size(), 8u);
  EXPECT_EQ(s[0], Labeling({1, 1, 1}, 2));
  EXPECT_EQ(s[1], Labeling({1, 1, 2}, 2));
  EXPECT_EQ(s[2], Labeling({1, 2, 1}, 2));
  EXPECT_EQ(s[6], Labeling({2, 2, 1}, 2));
  EXPECT_EQ(s[7], Labeling({2, 2, 2}, 2));
}

TEST(EnumerateStructuresTest, NoItemsGivesOneEmptyStructure) {
  const auto s = enumerate_structures(0, 3);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].size(), 0u);
}

TEST(EnumerateStructuresTest, BaseThreeCounting) {
  const auto s = enumerate_structures(2, 3);
  ASSERT_EQ(s.size(), 9u);
  for (std::uint32_t v = 0; v < 9; ++v) {
    EXPECT_EQ(s[v], Labeling({v / 3 + 1, v % 3 + 1}, 3));
  }
}

TEST(EnumerateStructuresTest, CapReportsStructureCount) {
  try {
    enumerate_structures(21, 2);
    FAIL() << "expected EnumerationTooLarge";
  } catch (const EnumerationTooLarge& e) {
    EXPECT_EQ(e.structure_count(), 2097152.0L);
    EXPECT_EQ(e.cap(), kDefaultEnumerationCap);
  }
  EXPECT_EQ(enumerate_structures(3, 2, 8).size(), 8u);
  EXPECT_THROW(enumerate_structures(3, 2, 7), EnumerationTooLarge);
}

// The aggregation steps (argmax with ties, marginal sums) applied to the
// reference product column.
TEST(StructurePosteriorTest, ReferenceProductsGiveTieAndMarginals) {
  std::vector<double> logs;
  for (double v : kReferenceProduct) logs.push_back(std::log(v));
  // The reference column is rounded to 7 digits, so entries 3 and 7 are
  // exactly equal.
  const StructurePosterior post(3, 2, logs);
  EXPECT_EQ(post.argmax(), (std::vector<Labeling>{Labeling({1, 2, 1}, 2),
                                                  Labeling({2, 2, 1}, 2)}));
  EXPECT_EQ(post.canonical_argmax(), Labeling({1, 2, 1}, 2));
  const auto sums = post.log_unnormalized_marginals();
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < 2; ++c) {
      EXPECT_LT(RelErr(std::exp(sums[i][c]), kReferenceMarginalSums[i][c]),
                2e-3);
    }
  }
  EXPECT_EQ(post.marginals().argmax, Labeling({1, 2, 2}, 2));
}

TEST(SpcClassifyTest, SmallExampleHasUniqueMaximum) {
  const SpcResult r = spc_classify(small_test(), small_train(),
                                   small_train_labels(),
                                   FiniteModelConfig::example_3_2());
  EXPECT_EQ(r.argmax, std::vector<Labeling>{Labeling({1, 1, 1}, 2)});
  EXPECT_EQ(r.canonical, Labeling({1, 1, 1}, 2));
  double total = 0.0;
  for (std::uint64_t s = 0; s < r.posterior.size(); ++s) {
    total += r.posterior.posterior(s);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(SpcClassifyTest, NoTestItemsGivesEmptyStructureWithCertainty) {
  const SpcResult r = spc_classify(FeatureTable(4), small_train(),
                                   small_train_labels(),
                                   FiniteModelConfig::example_3_2());
  EXPECT_EQ(r.canonical.size(), 0u);
  EXPECT_NEAR(r.posterior.posterior(0), 1.0, 1e-15);
}

TEST(SpcClassifyTest, TiesAreAllReported) {
  // Two identical test items and a class-symmetric training set: (1,1) and
  // (2,2) have the same weight.
  FiniteModelConfig cfg;
  cfg.alphabet_sizes = {2};
  const SpcResult r = spc_classify(FeatureTable{{1}, {1}},
                                   FeatureTable{{1}, {1}}, Labeling({1, 2}, 2),
                                   cfg);
  EXPECT_EQ(r.argmax,
            (std::vector<Labeling>{Labeling({1, 1}, 2), Labeling({2, 2}, 2)}));
  EXPECT_EQ(r.canonical, Labeling({1, 1}, 2));
}

TEST(SpcClassifyTest, RefusesBeyondCap) {
  FiniteModelConfig cfg = FiniteModelConfig::example_3_2();
  cfg.enumeration_cap = 4;
  EXPECT_THROW(spc_classify(small_test(), small_train(), small_train_labels(),
                            cfg),
               EnumerationTooLarge);
}

TEST(MpcClassifyTest, SingleClassIsCertain) {
  FiniteModelConfig cfg;
  const ItemPosteriors p = mpc_classify(FeatureTable{{1, 2}}, FeatureTable{{1, 1}},
                                        Labeling({1}, 1), cfg);
  EXPECT_NEAR(p.posterior(0, 1), 1.0, 1e-15);
}

TEST(MpcClassifyTest, EachItemIsTheSingleItemJointPosterior) {
  const auto cfg = FiniteModelConfig::example_3_2();
  const ItemPosteriors p =
      mpc_classify(small_test(), small_train(), small_train_labels(), cfg);
  const auto test = small_test();
  for (std::size_t i = 0; i < test.item_count(); ++i) {
    const std::size_t idx[] = {i};
    const SpcResult one = spc_classify(test.subset(idx), small_train(),
                                       small_train_labels(), cfg);
    for (std::uint32_t c = 1; c <= 2; ++c) {
      EXPECT_NEAR(p.log_posterior[i][c - 1], one.posterior.log_posterior(c - 1),
                  1e-12);
    }
    EXPECT_EQ(p.argmax[i], one.canonical[0]);
  }
}

TEST(MdpcClassifyTest, SmallExampleMarginals) {
  const MdpcResult r = mdpc_classify(small_test(), small_train(),
                                     small_train_labels(),
                                     FiniteModelConfig::example_3_2());
  EXPECT_EQ(r.marginals.argmax, Labeling({1, 1, 1}, 2));
  EXPECT_LT(RelErr(std::exp(r.log_unnormalized_marginals[0][0]), 8.050641e-7),
            1e-5);
  EXPECT_LT(RelErr(std::exp(r.log_unnormalized_marginals[0][1]), 5.948341e-7),
            1e-5);
}

TEST(MdpcClassifyTest, SingleItemEqualsMpc) {
  const auto cfg = FiniteModelConfig::example_3_2();
  const FeatureTable one{{2, 3, 1, 1}};
  const MdpcResult md =
      mdpc_classify(one, small_train(), small_train_labels(), cfg);
  const ItemPosteriors mp =
      mpc_classify(one, small_train(), small_train_labels(), cfg);
  for (int c = 0; c < 2; ++c) {
    EXPECT_NEAR(md.marginals.log_posterior[0][c], mp.log_posterior[0][c], 1e-12);
  }
}

TEST(MdpcClassifyTest, MarginalsEqualExhaustiveExactSums) {
  Rng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    testing::InstanceShape shape;
    shape.max_test = 3;
    const auto x = testing::random_instance(rng, shape);
    FiniteModelConfig cfg;
    cfg.alphabet_sizes = x.alphabet;
    oracle::FiniteSpec spec;
    for (std::uint32_t r : x.alphabet) {
      spec.lambda.push_back(oracle::Rational(1, r));
      spec.alphabet.push_back(r);
    }
    spec.beta.assign(x.k, 1);
    const auto exact = oracle::exact_posterior(
        x.test.size(), x.k, [&](const oracle::Labels& s) {
          return oracle::finite_joint(x.train, x.train_labels, x.test, s, x.k,
                                      spec);
        });
    const MdpcResult r =
        mdpc_classify(x.test_table(), x.train_table(), x.labels(), cfg);
    for (std::size_t i = 0; i < x.test.size(); ++i) {
      for (std::uint32_t c = 1; c <= x.k; ++c) {
        const double want = oracle::to_double(exact.marginal[i][c - 1]);
        EXPECT_LT(RelErr(r.marginals.posterior(i, c), want), 1e-9);
      }
    }
  }
}

TEST(FiniteInvarianceTest, PermutingTestItemsPermutesStructures) {
  const auto cfg = FiniteModelConfig::example_3_2();
  const auto test = small_test();
  const std::size_t perm[] = {2, 0, 1};
  const FeatureTable permuted = test.subset(perm);
  const SpcResult a = spc_classify(test, small_train(), small_train_labels(), cfg);
  const SpcResult b =
      spc_classify(permuted, small_train(), small_train_labels(), cfg);
  for (std::uint64_t s = 0; s < a.posterior.size(); ++s) {
    const Labeling l = a.posterior.structure(s);
    const Labeling lp({l[perm[0]], l[perm[1]], l[perm[2]]}, 2);
    const std::vector<Labeling> all = b.posterior.structures();
    const std::uint64_t idx =
        std::find(all.begin(), all.end(), lp) - all.begin();
    EXPECT_NEAR(a.posterior.log_posterior(s), b.posterior.log_posterior(idx),
                1e-12);
  }
}

TEST(FiniteInvarianceTest, RelabelingValueCodesLeavesPosteriorUnchanged) {
  const auto cfg = FiniteModelConfig::example_3_2();
  auto relabel = [](const FeatureTable& t) {
    FeatureTable out(t.feature_count());
    for (std::size_t i = 0; i < t.item_count(); ++i) {
      std::vector<std::uint32_t> row(t.row(i).begin(), t.row(i).end());
      row[1] = row[1] % 3 + 1;  // 1->2, 2->3, 3->1 on feature 2
      out.add_row(row);
    }
    return out;
  };
  const SpcResult a =
      spc_classify(small_test(), small_train(), small_train_labels(), cfg);
  const SpcResult b = spc_classify(relabel(small_test()), relabel(small_train()),
                                   small_train_labels(), cfg);
  for (std::uint64_t s = 0; s < a.posterior.size(); ++s) {
    EXPECT_NEAR(a.posterior.log_posterior(s), b.posterior.log_posterior(s),
                1e-12);
  }
}

TEST(FiniteInvarianceTest, MarginalArgmaxIgnoresCommonScale) {
  const MdpcResult r = mdpc_classify(small_test(), small_train(),
                                     small_train_labels(),
                                     FiniteModelConfig::example_3_2());
  std::vector<double> shifted = r.posterior.log_unnormalized();
  for (double& v : shifted) v += 123.456;
  const StructurePosterior post(3, 2, shifted);
  EXPECT_EQ(post.marginals().argmax, r.marginals.argmax);
}

TEST(FiniteAccuracyTest, LogSpaceMatchesExactArithmeticWithLargeCounts) {
  Rng rng(32);
  for (int rep = 0; rep < 10; ++rep) {
    testing::InstanceShape shape;
    shape.max_train = 50;
    shape.max_test = 4;
    const auto x = testing::random_instance(rng, shape);
    FiniteModelConfig cfg;
    cfg.alphabet_sizes = x.alphabet;
    cfg.lambda_mode = FiniteModelConfig::LambdaMode::kConstant;
    cfg.lambda_constant = 0.5;
    oracle::FiniteSpec spec;
    for (std::uint32_t r : x.alphabet) {
      spec.lambda.push_back(oracle::Rational(1, 2));
      spec.alphabet.push_back(r);
    }
    spec.beta.assign(x.k, 1);
    const Labeling s(std::vector<std::uint32_t>(x.test.size(), 1), x.k);
    const double want = std::log(oracle::to_double(oracle::finite_joint(
        x.train, x.train_labels, x.test, s.labels(), x.k, spec)));
    const double got =
        log_predictive_finite(count_frequencies(x.test_table(), s),
                              count_frequencies(x.train_table(), x.labels()),
                              cfg)
            .value() +
        log_structure_prior(s, x.labels(), cfg).value();
    EXPECT_LT(std::abs(got - want), 1e-9 * std::abs(want));
  }
}

}  // namespace
}  // namespace predclass

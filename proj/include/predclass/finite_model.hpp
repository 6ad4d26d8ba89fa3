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

#ifndef PREDCLASS_FINITE_MODEL_HPP_
#define PREDCLASS_FINITE_MODEL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "predclass/counts.hpp"
#include "predclass/data.hpp"
#include "predclass/error.hpp"
#include "predclass/label_prior.hpp"
#include "predclass/log_prob.hpp"
#include "predclass/structures.hpp"

namespace predclass {

// Hyperparameters of the finite-alphabet (Dirichlet-multinomial) model.
struct FiniteModelConfig {
  enum class LambdaMode {
    kUniformOverAlphabet,  // lambda_cjl = 1 / r_j
    kConstant,             // lambda_cjl = lambda_constant
    kExplicit,             // lambda_cjl = lambda_explicit[c-1][j-1][l-1]
  };

  // r_j per feature. Empty means: infer r_j as the largest code observed in
  // training or test data, unless infer_alphabet is false.
  std::vector<std::uint32_t> alphabet_sizes;
  bool infer_alphabet = true;
  LambdaMode lambda_mode = LambdaMode::kUniformOverAlphabet;
  double lambda_constant = 1.0;
  std::vector<std::vector<std::vector<double>>> lambda_explicit;
  // beta_c per class; empty means 1 for every class.
  std::vector<double> beta;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;

  // Unit pseudo-counts on every value and class over a 3-letter alphabet for
  // each of 4 features.
  static FiniteModelConfig example_3_2() {
    FiniteModelConfig cfg;
    cfg.alphabet_sizes = {3, 3, 3, 3};
    cfg.lambda_mode = LambdaMode::kConstant;
    cfg.lambda_constant = 1.0;
    cfg.beta = {1.0, 1.0};
    return cfg;
  }

  // lambda_cjl; all indices 1-based.
  double lambda(std::uint32_t c, std::size_t j, std::uint32_t l) const {
    switch (lambda_mode) {
      case LambdaMode::kUniformOverAlphabet:
        return 1.0 / alphabet_sizes.at(j - 1);
      case LambdaMode::kConstant:
        return lambda_constant;
      case LambdaMode::kExplicit:
        return lambda_explicit.at(c - 1).at(j - 1).at(l - 1);
    }
    return 0.0;
  }

  // Lambda_cj = sum over the alphabet of lambda_cjl.
  double lambda_total(std::uint32_t c, std::size_t j) const {
    switch (lambda_mode) {
      case LambdaMode::kUniformOverAlphabet:
        return 1.0;
      case LambdaMode::kConstant:
        return lambda_constant * alphabet_sizes.at(j - 1);
      case LambdaMode::kExplicit: {
        double s = 0.0;
        for (double v : lambda_explicit.at(c - 1).at(j - 1)) s += v;
        return s;
      }
    }
    return 0.0;
  }

  // Checks hyperparameter domains against a problem with k classes and d
  // features. Alphabet sizes must already be resolved.
  void validate(std::uint32_t k, std::size_t d) const {
    if (alphabet_sizes.size() != d) {
      throw ConfigError("alphabet_sizes has " +
                        std::to_string(alphabet_sizes.size()) +
                        " entries for " + std::to_string(d) + " features");
    }
    for (std::uint32_t r : alphabet_sizes) {
      if (r < 1) throw ConfigError("alphabet sizes must be >= 1");
    }
    if (lambda_mode == LambdaMode::kConstant && !(lambda_constant > 0.0)) {
      throw DomainError("lambda must be positive");
    }
    if (lambda_mode == LambdaMode::kExplicit) {
      if (lambda_explicit.size() != k) {
        throw ConfigError("explicit lambda needs one block per class");
      }
      for (const auto& per_class : lambda_explicit) {
        if (per_class.size() != d) {
          throw ConfigError("explicit lambda needs one row per feature");
        }
        for (std::size_t j = 0; j < d; ++j) {
          if (per_class[j].size() != alphabet_sizes[j]) {
            throw ConfigError("explicit lambda row length must equal r_j");
          }
          for (double v : per_class[j]) {
            if (!(v > 0.0)) throw DomainError("lambda must be positive");
          }
        }
      }
    }
    resolve_beta(beta, k);
  }
};

// Returns `cfg` with alphabet sizes filled in from the largest observed codes
// when they are not configured.
inline FiniteModelConfig resolve_alphabet(const FiniteModelConfig& cfg,
                                          const CountTensor& a,
                                          const CountTensor& b) {
  if (!cfg.alphabet_sizes.empty()) return cfg;
  if (!cfg.infer_alphabet) {
    throw ConfigError("alphabet sizes not configured and inference disabled");
  }
  FiniteModelConfig out = cfg;
  for (std::size_t j = 1; j <= a.feature_count(); ++j) {
    out.alphabet_sizes.push_back(
        std::max<std::uint32_t>({1u, a.max_code(j), b.max_code(j)}));
  }
  return out;
}

inline FiniteModelConfig resolve_alphabet(const FiniteModelConfig& cfg,
                                          const FeatureTable& train,
                                          const FeatureTable& test) {
  if (!cfg.alphabet_sizes.empty()) return cfg;
  if (!cfg.infer_alphabet) {
    throw ConfigError("alphabet sizes not configured and inference disabled");
  }
  FiniteModelConfig out = cfg;
  const std::size_t d = std::max(train.feature_count(), test.feature_count());
  for (std::size_t j = 0; j < d; ++j) {
    std::uint32_t r = 1;
    if (j < train.feature_count()) r = std::max(r, train.max_code(j));
    if (j < test.feature_count()) r = std::max(r, test.max_code(j));
    out.alphabet_sizes.push_back(r);
  }
  return out;
}

namespace finite_internal {

inline void check_alphabet(const CountTensor& t,
                           const std::vector<std::uint32_t>& r) {
  for (std::size_t j = 1; j <= t.feature_count(); ++j) {
    const std::uint32_t hi = t.max_code(j);
    if (hi > r[j - 1]) {
      throw AlphabetViolation("feature " + std::to_string(j) +
                              " has code " + std::to_string(hi) +
                              " above alphabet size " +
                              std::to_string(r[j - 1]));
    }
  }
}

}  // namespace finite_internal

namespace finite_internal {

// The predictive with alphabet sizes already resolved and validated.
inline double log_predictive_resolved(const CountTensor& test_counts,
                                      const CountTensor& train_counts,
                                      const FiniteModelConfig& rc) {
  double out = 0.0;
  for (std::uint32_t c = 1; c <= train_counts.class_count(); ++c) {
    const std::uint64_t n_c = test_counts.class_size(c);
    if (n_c == 0) continue;
    const double m_c = static_cast<double>(train_counts.class_size(c));
    for (std::size_t j = 1; j <= train_counts.feature_count(); ++j) {
      out -= log_rising_factorial(m_c + rc.lambda_total(c, j), n_c);
      for (const auto& [l, n] : test_counts.cell(c, j)) {
        const double m = static_cast<double>(train_counts.count(c, j, l));
        out += log_rising_factorial(m + rc.lambda(c, j, l), n);
      }
    }
  }
  return out;
}

inline void check_table_alphabet(const FeatureTable& t,
                                 const std::vector<std::uint32_t>& r) {
  for (std::size_t j = 0; j < t.feature_count(); ++j) {
    const std::uint32_t hi = t.max_code(j);
    if (hi > r[j]) {
      throw AlphabetViolation("feature " + std::to_string(j + 1) +
                              " has code " + std::to_string(hi) +
                              " above alphabet size " + std::to_string(r[j]));
    }
  }
}

}  // namespace finite_internal

// log p(test | train): for every class c and feature j,
// Gamma(m_c + Lambda_cj) / Gamma(n_c + m_c + Lambda_cj) times
// prod_l Gamma(n_cjl + m_cjl + lambda_cjl) / Gamma(m_cjl + lambda_cjl).
inline LogProb log_predictive_finite(const CountTensor& test_counts,
                                     const CountTensor& train_counts,
                                     const FiniteModelConfig& cfg) {
  if (test_counts.class_count() != train_counts.class_count() ||
      test_counts.feature_count() != train_counts.feature_count()) {
    throw PairingError("log_predictive_finite: tensors differ in shape");
  }
  const FiniteModelConfig rc = resolve_alphabet(cfg, train_counts, test_counts);
  rc.validate(train_counts.class_count(), train_counts.feature_count());
  finite_internal::check_alphabet(train_counts, rc.alphabet_sizes);
  finite_internal::check_alphabet(test_counts, rc.alphabet_sizes);
  return LogProb(
      finite_internal::log_predictive_resolved(test_counts, train_counts, rc));
}

// log p(S | T) under the configured class-proportion hyperparameters.
inline LogProb log_structure_prior(const Labeling& test_labels,
                                   const Labeling& train_labels,
                                   const FiniteModelConfig& cfg) {
  return log_structure_prior(test_labels, train_labels, cfg.beta);
}

struct SpcResult {
  StructurePosterior posterior;
  // Every maximal structure, lexicographically ascending.
  std::vector<Labeling> argmax;
  // The lexicographically smallest maximal structure.
  Labeling canonical;
};

struct MdpcResult {
  StructurePosterior posterior;
  // log of the unnormalized posterior mass with S_i = c; items by classes.
  std::vector<std::vector<double>> log_unnormalized_marginals;
  ItemPosteriors marginals;
};

inline SpcResult make_spc_result(StructurePosterior posterior) {
  auto argmax = posterior.argmax();
  Labeling canonical = argmax.front();
  return {std::move(posterior), std::move(argmax), std::move(canonical)};
}

inline MdpcResult make_mdpc_result(StructurePosterior posterior) {
  auto sums = posterior.log_unnormalized_marginals();
  auto marginals = make_item_posteriors(sums, posterior.class_count());
  return {std::move(posterior), std::move(sums), std::move(marginals)};
}

namespace finite_internal {

inline void check_inputs(const FeatureTable& test, const FeatureTable& train,
                         const Labeling& train_labels) {
  if (train.item_count() != train_labels.size()) {
    throw PairingError("training table and labels differ in length");
  }
  if (!test.empty() && !train.empty() &&
      test.feature_count() != train.feature_count()) {
    throw PairingError("training and test tables differ in feature count");
  }
}

inline std::size_t feature_count(const FeatureTable& test,
                                  const FeatureTable& train) {
  return train.feature_count() ? train.feature_count() : test.feature_count();
}

}  // namespace finite_internal

// Posterior over all k^n joint labelings of the test items.
inline StructurePosterior finite_structure_posterior(
    const FeatureTable& test, const FeatureTable& train,
    const Labeling& train_labels, const FiniteModelConfig& cfg) {
  finite_internal::check_inputs(test, train, train_labels);
  const std::uint32_t k = train_labels.class_count();
  const std::size_t d = finite_internal::feature_count(test, train);
  const FiniteModelConfig rc = resolve_alphabet(cfg, train, test);
  rc.validate(k, d);
  CountTensor train_counts = count_frequencies(train, train_labels);
  if (train.feature_count() == 0) train_counts = CountTensor(k, d);
  finite_internal::check_alphabet(train_counts, rc.alphabet_sizes);
  finite_internal::check_table_alphabet(test, rc.alphabet_sizes);
  const auto beta = resolve_beta(rc.beta, k);
  const auto train_sizes = train_labels.class_sizes();
  return enumerate_posterior(
      test.item_count(), k, rc.enumeration_cap, [&](const Labeling& s) {
        CountTensor test_counts(k, d);
        for (std::size_t i = 0; i < test.item_count(); ++i) {
          test_counts.add_item(s[i], test.row(i));
        }
        return finite_internal::log_predictive_resolved(test_counts,
                                                        train_counts, rc) +
               log_label_prior_from_sizes(s.class_sizes(), train_sizes, beta);
      });
}

// Simultaneous classifier: the joint labeling maximizing p(S | data).
inline SpcResult spc_classify(const FeatureTable& test,
                              const FeatureTable& train,
                              const Labeling& train_labels,
                              const FiniteModelConfig& cfg) {
  return make_spc_result(
      finite_structure_posterior(test, train, train_labels, cfg));
}

// Marginalized classifier: per-item argmax of p(S_i = c | data), the label
// marginals of the joint posterior.
inline MdpcResult mdpc_classify(const FeatureTable& test,
                                const FeatureTable& train,
                                const Labeling& train_labels,
                                const FiniteModelConfig& cfg) {
  return make_mdpc_result(
      finite_structure_posterior(test, train, train_labels, cfg));
}

// Marginal classifier: each test item classified on its own against the
// training data, with label prior proportional to m_c + beta_c.
inline ItemPosteriors mpc_classify(const FeatureTable& test,
                                   const FeatureTable& train,
                                   const Labeling& train_labels,
                                   const FiniteModelConfig& cfg) {
  finite_internal::check_inputs(test, train, train_labels);
  const std::uint32_t k = train_labels.class_count();
  const std::size_t d = finite_internal::feature_count(test, train);
  const FiniteModelConfig rc = resolve_alphabet(cfg, train, test);
  rc.validate(k, d);
  CountTensor train_counts = count_frequencies(train, train_labels);
  if (train.feature_count() == 0) train_counts = CountTensor(k, d);
  finite_internal::check_alphabet(train_counts, rc.alphabet_sizes);
  finite_internal::check_table_alphabet(test, rc.alphabet_sizes);
  const auto beta = resolve_beta(rc.beta, k);
  const auto train_sizes = train_labels.class_sizes();
  std::vector<std::vector<double>> scores;
  for (std::size_t i = 0; i < test.item_count(); ++i) {
    std::vector<double> row;
    for (std::uint32_t c = 1; c <= k; ++c) {
      std::vector<std::uint64_t> one(k, 0);
      one[c - 1] = 1;
      row.push_back(finite_internal::log_predictive_resolved(
                        one_item_tensor(test.row(i), c, k), train_counts, rc) +
                    log_label_prior_from_sizes(one, train_sizes, beta));
    }
    scores.push_back(std::move(row));
  }
  return make_item_posteriors(std::move(scores), k);
}

}  // namespace predclass

#endif  // PREDCLASS_FINITE_MODEL_HPP_

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

#ifndef PREDCLASS_PARTITION_MODEL_HPP_
#define PREDCLASS_PARTITION_MODEL_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "predclass/counts.hpp"
#include "predclass/data.hpp"
#include "predclass/error.hpp"
#include "predclass/finite_model.hpp"
#include "predclass/label_prior.hpp"
#include "predclass/log_prob.hpp"
#include "predclass/partition_vector.hpp"
#include "predclass/structures.hpp"

namespace predclass {

// Hyperparameters of the partition-exchangeable (Ewens) model.
struct PartitionModelConfig {
  enum class LabelPrior {
    kUniformOverStructures,  // p(S | T) constant
    kDirichletMultinomial,   // p(S | T) from class sizes with beta
  };

  // Dispersion parameter; required, there is no default.
  std::optional<double> psi;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  LabelPrior label_prior = LabelPrior::kUniformOverStructures;
  // beta_c for the Dirichlet-multinomial label prior; empty means all 1.
  std::vector<double> beta;

  // psi = 5.
  static PartitionModelConfig example_5_1() {
    PartitionModelConfig cfg;
    cfg.psi = 5.0;
    return cfg;
  }

  double require_psi() const {
    if (!psi) throw ConfigError("partition model requires psi");
    if (!(*psi > 0.0)) throw DomainError("psi must be positive");
    return *psi;
  }
};

namespace partition_internal {

inline void check_psi(double psi) {
  if (!(psi > 0.0)) {
    throw DomainError("psi must be positive, got " + std::to_string(psi));
  }
}

// sum_t rho_t log(psi / t) - log(rho_t!)
inline double species_term(const PartitionVector& rho, double log_psi) {
  double out = 0.0;
  for (const auto& [t, r] : rho.entries()) {
    out += static_cast<double>(r) * (log_psi - std::log(static_cast<double>(t))) -
           log_factorial(r);
  }
  return out;
}

}  // namespace partition_internal

// Ewens sampling formula:
// log[ n! / (psi (psi+1) ... (psi+n-1)) * prod_t (psi/t)^rho_t / rho_t! ].
inline LogProb log_ewens(const PartitionVector& rho, double psi) {
  partition_internal::check_psi(psi);
  const std::uint64_t n = rho.total();
  return LogProb(log_factorial(n) - log_rising_factorial(psi, n) +
                 partition_internal::species_term(rho, std::log(psi)));
}

// Product of Ewens probabilities over every (class, feature) cell.
inline LogProb log_joint_ewens(const CountTensor& counts, double psi) {
  partition_internal::check_psi(psi);
  double out = 0.0;
  for (std::uint32_t c = 1; c <= counts.class_count(); ++c) {
    for (std::size_t j = 1; j <= counts.feature_count(); ++j) {
      out += log_ewens(partition_vector(counts, c, j), psi).value();
    }
  }
  return LogProb(out);
}

inline LogProb log_joint_ewens(const FeatureTable& data, const Labeling& s,
                               double psi) {
  return log_joint_ewens(count_frequencies(data, s), psi);
}

// log p(test | train) under partition exchangeability: the ratio of the Ewens
// probability of the combined partition to that of the training partition,
// cell by cell:
//   log((m_c+n_c)!/m_c!) - log((psi+m_c) ... (psi+m_c+n_c-1))
//   + sum_t [rho~_t log(psi/t) - log rho~_t!] - sum_t [rho_t log(psi/t) - log rho_t!]
inline LogProb log_predictive_pe(const CountTensor& test_counts,
                                 const CountTensor& train_counts, double psi) {
  partition_internal::check_psi(psi);
  if (test_counts.class_count() != train_counts.class_count() ||
      test_counts.feature_count() != train_counts.feature_count()) {
    throw PairingError("log_predictive_pe: tensors differ in shape");
  }
  const double log_psi = std::log(psi);
  double out = 0.0;
  for (std::uint32_t c = 1; c <= train_counts.class_count(); ++c) {
    const std::uint64_t n_c = test_counts.class_size(c);
    if (n_c == 0) continue;
    const double m_c = static_cast<double>(train_counts.class_size(c));
    for (std::size_t j = 1; j <= train_counts.feature_count(); ++j) {
      out += log_rising_factorial(m_c + 1.0, n_c) -
             log_rising_factorial(psi + m_c, n_c);
      out += partition_internal::species_term(
                 combined_partition_vector(train_counts, test_counts, c, j),
                 log_psi) -
             partition_internal::species_term(
                 partition_vector(train_counts, c, j), log_psi);
    }
  }
  return LogProb(out);
}

// log p(x | train, S_i = c): the predictive above for a single item, built by
// moving each feature's value one step up the training partition vector.
inline LogProb pe_marginal_predictive(std::span<const std::uint32_t> item,
                                      const CountTensor& train_counts,
                                      std::uint32_t c, double psi) {
  partition_internal::check_psi(psi);
  if (item.size() != train_counts.feature_count()) {
    throw PairingError("pe_marginal_predictive: item has wrong feature count");
  }
  const double log_psi = std::log(psi);
  const double m_c = static_cast<double>(train_counts.class_size(c));
  double out = 0.0;
  for (std::size_t j = 1; j <= train_counts.feature_count(); ++j) {
    const PartitionVector rho = partition_vector(train_counts, c, j);
    const PartitionVector updated = update_partition_vector_one_item(
        rho, train_counts.count(c, j, item[j - 1]));
    out += std::log(m_c + 1.0) - std::log(psi + m_c) +
           partition_internal::species_term(updated, log_psi) -
           partition_internal::species_term(rho, log_psi);
  }
  return LogProb(out);
}

// sum_i log p(x_i | train, S_i): the data predictive of a labeling whose items
// are each evaluated against the training data alone.
inline LogProb pe_marginal_product(const FeatureTable& test, const Labeling& s,
                                   const CountTensor& train_counts,
                                   double psi) {
  if (test.item_count() != s.size()) {
    throw PairingError("pe_marginal_product: items and labels differ");
  }
  double out = 0.0;
  for (std::size_t i = 0; i < test.item_count(); ++i) {
    out += pe_marginal_predictive(test.row(i), train_counts, s[i], psi).value();
  }
  return LogProb(out);
}

// Marginal classifier output: per-item posteriors plus the implied joint
// labeling and its product predictive.
struct PeMpcResult {
  ItemPosteriors items;
  Labeling implied;
  LogProb implied_log_predictive;
};

namespace partition_internal {

inline CountTensor train_tensor(const FeatureTable& test,
                                const FeatureTable& train,
                                const Labeling& train_labels) {
  finite_internal::check_inputs(test, train, train_labels);
  const std::size_t d = finite_internal::feature_count(test, train);
  if (train.feature_count() == 0) {
    return CountTensor(train_labels.class_count(), d);
  }
  return count_frequencies(train, train_labels);
}

}  // namespace partition_internal

inline StructurePosterior pe_structure_posterior(
    const FeatureTable& test, const FeatureTable& train,
    const Labeling& train_labels, const PartitionModelConfig& cfg) {
  const double psi = cfg.require_psi();
  const CountTensor train_counts =
      partition_internal::train_tensor(test, train, train_labels);
  const std::uint32_t k = train_labels.class_count();
  const std::size_t d = train_counts.feature_count();
  const bool dm_prior =
      cfg.label_prior == PartitionModelConfig::LabelPrior::kDirichletMultinomial;
  const auto beta = resolve_beta(cfg.beta, k);
  const auto train_sizes = train_labels.class_sizes();
  return enumerate_posterior(
      test.item_count(), k, cfg.enumeration_cap, [&](const Labeling& s) {
        CountTensor test_counts(k, d);
        for (std::size_t i = 0; i < test.item_count(); ++i) {
          test_counts.add_item(s[i], test.row(i));
        }
        double w = log_predictive_pe(test_counts, train_counts, psi).value();
        if (dm_prior) {
          w += log_label_prior_from_sizes(s.class_sizes(), train_sizes, beta);
        }
        return w;
      });
}

inline SpcResult pe_spc_classify(const FeatureTable& test,
                                 const FeatureTable& train,
                                 const Labeling& train_labels,
                                 const PartitionModelConfig& cfg) {
  return make_spc_result(pe_structure_posterior(test, train, train_labels, cfg));
}

inline MdpcResult pe_mdpc_classify(const FeatureTable& test,
                                   const FeatureTable& train,
                                   const Labeling& train_labels,
                                   const PartitionModelConfig& cfg) {
  return make_mdpc_result(
      pe_structure_posterior(test, train, train_labels, cfg));
}

inline PeMpcResult pe_mpc_classify(const FeatureTable& test,
                                   const FeatureTable& train,
                                   const Labeling& train_labels,
                                   const PartitionModelConfig& cfg) {
  const double psi = cfg.require_psi();
  const CountTensor train_counts =
      partition_internal::train_tensor(test, train, train_labels);
  const std::uint32_t k = train_labels.class_count();
  const bool dm_prior =
      cfg.label_prior == PartitionModelConfig::LabelPrior::kDirichletMultinomial;
  const auto beta = resolve_beta(cfg.beta, k);
  const auto train_sizes = train_labels.class_sizes();
  std::vector<std::vector<double>> scores;
  for (std::size_t i = 0; i < test.item_count(); ++i) {
    std::vector<double> row;
    for (std::uint32_t c = 1; c <= k; ++c) {
      double w = pe_marginal_predictive(test.row(i), train_counts, c, psi).value();
      if (dm_prior) {
        std::vector<std::uint64_t> one(k, 0);
        one[c - 1] = 1;
        w += log_label_prior_from_sizes(one, train_sizes, beta);
      }
      row.push_back(w);
    }
    scores.push_back(std::move(row));
  }
  ItemPosteriors items = make_item_posteriors(std::move(scores), k);
  Labeling implied = items.argmax;
  const LogProb product =
      test.empty() ? LogProb::one()
                   : pe_marginal_product(test, implied, train_counts, psi);
  return {std::move(items), std::move(implied), product};
}

}  // namespace predclass

#endif  // PREDCLASS_PARTITION_MODEL_HPP_

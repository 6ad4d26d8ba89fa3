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

#ifndef PREDCLASS_LABEL_PRIOR_HPP_
#define PREDCLASS_LABEL_PRIOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "predclass/data.hpp"
#include "predclass/error.hpp"
#include "predclass/log_prob.hpp"

namespace predclass {

// Dirichlet hyperparameters for the class proportions, one per class. An
// empty vector means beta_c = 1 for every class.
inline std::vector<double> resolve_beta(const std::vector<double>& beta,
                                        std::uint32_t k) {
  if (beta.empty()) return std::vector<double>(k, 1.0);
  if (beta.size() != k) {
    throw ConfigError("beta has " + std::to_string(beta.size()) +
                      " entries for " + std::to_string(k) + " classes");
  }
  for (double b : beta) {
    if (!(b > 0.0)) throw DomainError("beta entries must be positive");
  }
  return beta;
}

// Dirichlet-multinomial predictive probability of the test class sizes
// n_c given training class sizes m_c, for one ordered labeling.
inline double log_label_prior_from_sizes(
    const std::vector<std::uint64_t>& test_sizes,
    const std::vector<std::uint64_t>& train_sizes,
    const std::vector<double>& beta) {
  double beta_sum = 0.0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  double out = 0.0;
  for (std::size_t c = 0; c < beta.size(); ++c) {
    beta_sum += beta[c];
    m += train_sizes[c];
    n += test_sizes[c];
    out += log_rising_factorial(static_cast<double>(train_sizes[c]) + beta[c],
                                test_sizes[c]);
  }
  return out - log_rising_factorial(static_cast<double>(m) + beta_sum, n);
}

// log p(S | T): Gamma(m + sum beta) / Gamma(n + m + sum beta) times
// prod_c Gamma(n_c + m_c + beta_c) / Gamma(m_c + beta_c).
inline LogProb log_structure_prior(const Labeling& test_labels,
                                   const Labeling& train_labels,
                                   const std::vector<double>& beta) {
  if (test_labels.class_count() != train_labels.class_count()) {
    throw PairingError("log_structure_prior: labelings use different k");
  }
  const auto b = resolve_beta(beta, train_labels.class_count());
  return LogProb(log_label_prior_from_sizes(test_labels.class_sizes(),
                                            train_labels.class_sizes(), b));
}

}  // namespace predclass

#endif  // PREDCLASS_LABEL_PRIOR_HPP_

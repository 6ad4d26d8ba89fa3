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

#ifndef PREDCLASS_SUCCESSION_HPP_
#define PREDCLASS_SUCCESSION_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "predclass/error.hpp"

namespace predclass {

// Observed species counts n_1..n_d (all positive), with an optional fixed
// alphabet size that overrides the number of observed species for the
// fixed-alphabet rules. Species are addressed 1-based.
class FrequencyRecord {
 public:
  FrequencyRecord() = default;
  explicit FrequencyRecord(std::vector<std::uint64_t> counts,
                           std::optional<std::uint64_t> alphabet_size = {})
      : counts_(std::move(counts)), alphabet_size_(alphabet_size) {
    for (std::uint64_t n : counts_) {
      if (n == 0) throw DomainError("FrequencyRecord: counts must be positive");
      total_ += n;
    }
    if (alphabet_size_ && *alphabet_size_ < counts_.size()) {
      throw DomainError("FrequencyRecord: alphabet smaller than observed species");
    }
  }

  // A fixed alphabet of `alphabet_size` species with counts given for each
  // (zeros allowed).
  static FrequencyRecord with_alphabet(std::vector<std::uint64_t> counts) {
    FrequencyRecord r;
    r.alphabet_size_ = counts.size();
    for (std::uint64_t n : counts) r.total_ += n;
    r.counts_ = std::move(counts);
    return r;
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t count(std::uint64_t j) const {
    if (j < 1 || j > species()) {
      throw DomainError("species " + std::to_string(j) + " not in record");
    }
    return j <= counts_.size() ? counts_[j - 1] : 0;
  }
  std::uint64_t total() const { return total_; }
  // d: the fixed alphabet size when set, otherwise the observed species count.
  std::uint64_t species() const {
    return alphabet_size_ ? *alphabet_size_ : counts_.size();
  }
  std::uint64_t observed_species() const { return counts_.size(); }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  std::optional<std::uint64_t> alphabet_size_;
};

// A succession target: a known species (1-based) or a not-yet-seen one.
struct Outcome {
  static constexpr std::uint64_t kNew = 0;
  std::uint64_t species = kNew;

  static Outcome known(std::uint64_t j) { return {j}; }
  static Outcome novel() { return {kNew}; }
  bool is_new() const { return species == kNew; }
};

// (n_j + 1) / (N + d)
inline double laplace_rule(const FrequencyRecord& rec, std::uint64_t j) {
  const double n_j = static_cast<double>(rec.count(j));
  return (n_j + 1.0) / static_cast<double>(rec.total() + rec.species());
}

// (n_j + 1) / (N + d + 1) for species j; 1 / (N + d + 1) for a new species.
inline double de_morgan_rule(const FrequencyRecord& rec, Outcome target) {
  const double denom = static_cast<double>(rec.total() + rec.species() + 1);
  if (target.is_new()) return 1.0 / denom;
  return (static_cast<double>(rec.count(target.species)) + 1.0) / denom;
}

// (n_j + alpha) / (N + d alpha). Stated for alphabets of at least three
// species; accepted here for d >= 2.
inline double johnson_rule(const FrequencyRecord& rec, std::uint64_t j,
                           double alpha) {
  if (!(alpha > 0.0)) throw DomainError("johnson_rule: alpha must be positive");
  if (rec.species() < 2) {
    throw DomainError("johnson_rule: alphabet must have at least 2 species");
  }
  return (static_cast<double>(rec.count(j)) + alpha) /
         (static_cast<double>(rec.total()) +
          static_cast<double>(rec.species()) * alpha);
}

// n_j / (N + theta) for species j; theta / (N + theta) for a new species.
inline double pd_succession(const FrequencyRecord& rec, Outcome target,
                            double theta) {
  if (!(theta > 0.0)) throw DomainError("pd_succession: theta must be positive");
  const double denom = static_cast<double>(rec.total()) + theta;
  if (target.is_new()) return theta / denom;
  return static_cast<double>(rec.count(target.species)) / denom;
}

namespace succession_internal {

inline void check_trials(std::uint64_t x, std::uint64_t n) {
  if (x > n) {
    throw DomainError("successes " + std::to_string(x) + " exceed trials " +
                      std::to_string(n));
  }
}

inline void check_shape(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw DomainError("alpha and beta must be positive");
  }
}

inline double log_choose(std::uint64_t n, std::uint64_t x) {
  return std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0);
}

inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace succession_internal

// C(N, X) B(X + alpha, N - X + beta) / B(alpha, beta)
inline double beta_binomial_pmf(std::uint64_t x, std::uint64_t n, double alpha,
                                double beta) {
  succession_internal::check_trials(x, n);
  succession_internal::check_shape(alpha, beta);
  using namespace succession_internal;
  return std::exp(log_choose(n, x) +
                  log_beta(static_cast<double>(x) + alpha,
                           static_cast<double>(n - x) + beta) -
                  log_beta(alpha, beta));
}

// (X + alpha) / (N + alpha + beta)
inline double posterior_succession(std::uint64_t x, std::uint64_t n,
                                   double alpha, double beta) {
  succession_internal::check_trials(x, n);
  succession_internal::check_shape(alpha, beta);
  return (static_cast<double>(x) + alpha) /
         (static_cast<double>(n) + alpha + beta);
}

// Binomial(N, alpha / (alpha + beta)) at X.
inline double heterogeneous_binomial_pmf(std::uint64_t x, std::uint64_t n,
                                         double alpha, double beta) {
  succession_internal::check_trials(x, n);
  succession_internal::check_shape(alpha, beta);
  const double p = alpha / (alpha + beta);
  return std::exp(succession_internal::log_choose(n, x) +
                  static_cast<double>(x) * std::log(p) +
                  static_cast<double>(n - x) * std::log1p(-p));
}

}  // namespace predclass

#endif  // PREDCLASS_SUCCESSION_HPP_

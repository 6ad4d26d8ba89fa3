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

#ifndef PREDCLASS_STRUCTURES_HPP_
#define PREDCLASS_STRUCTURES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "predclass/data.hpp"
#include "predclass/error.hpp"
#include "predclass/log_prob.hpp"

namespace predclass {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// Two log weights closer than this (relative to their magnitude) are treated
// as a tie.
inline constexpr double kLogTieTolerance = 1e-9;

inline bool log_weights_tied(double a, double b) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= kLogTieTolerance * std::max(1.0, std::abs(a));
}

// k^n, or throws EnumerationTooLarge when it exceeds `cap`.
inline std::uint64_t checked_structure_count(std::size_t n, std::uint32_t k,
                                             std::uint64_t cap) {
  if (k == 0) throw DomainError("class count must be >= 1");
  const long double exact = std::pow(static_cast<long double>(k),
                                     static_cast<long double>(n));
  if (exact > static_cast<long double>(cap)) throw EnumerationTooLarge(exact, cap);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= k;
  return count;
}

// The labeling at position `index` of the lexicographic order over
// {1..k}^n, last item varying fastest.
inline Labeling structure_at(std::uint64_t index, std::size_t n,
                             std::uint32_t k) {
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = n; i-- > 0;) {
    labels[i] = static_cast<std::uint32_t>(index % k) + 1;
    index /= k;
  }
  return Labeling(std::move(labels), k);
}

// All k^n labelings of n items in lexicographic order.
inline std::vector<Labeling> enumerate_structures(
    std::size_t n, std::uint32_t k,
    std::uint64_t cap = kDefaultEnumerationCap) {
  const std::uint64_t count = checked_structure_count(n, k, cap);
  std::vector<Labeling> out;
  out.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) out.push_back(structure_at(s, n, k));
  return out;
}

// Per-item class posterior table with argmax labels. Rows are items, columns
// classes 1..k; entries are normalized log probabilities.
struct ItemPosteriors {
  std::vector<std::vector<double>> log_posterior;
  Labeling argmax;
  // Classes tied with the argmax, per item (always contains the argmax).
  std::vector<std::vector<std::uint32_t>> tied;

  std::size_t item_count() const { return log_posterior.size(); }
  double posterior(std::size_t item, std::uint32_t c) const {
    return std::exp(log_posterior[item][c - 1]);
  }
};

// Normalizes each row of unnormalized per-item log scores and picks the
// lowest-index maximum.
inline ItemPosteriors make_item_posteriors(
    std::vector<std::vector<double>> log_scores, std::uint32_t k) {
  ItemPosteriors out;
  std::vector<std::uint32_t> labels;
  for (auto& row : log_scores) {
    normalize_log(row);
    std::uint32_t best = 0;
    for (std::uint32_t c = 1; c < row.size(); ++c) {
      if (row[c] > row[best] && !log_weights_tied(row[c], row[best])) best = c;
    }
    std::vector<std::uint32_t> tied;
    for (std::uint32_t c = 0; c < row.size(); ++c) {
      if (log_weights_tied(row[c], row[best])) tied.push_back(c + 1);
    }
    labels.push_back(best + 1);
    out.tied.push_back(std::move(tied));
  }
  out.log_posterior = std::move(log_scores);
  out.argmax = Labeling(std::move(labels), k);
  return out;
}

// Posterior over every labeling of n test items into k classes. Structures
// are addressed by their lexicographic index; see structure_at.
class StructurePosterior {
 public:
  StructurePosterior(std::size_t n, std::uint32_t k,
                     std::vector<double> log_unnormalized)
      : n_(n), k_(k), log_unnormalized_(std::move(log_unnormalized)) {
    log_normalizer_ = log_sum_exp(log_unnormalized_);
  }

  std::size_t item_count() const { return n_; }
  std::uint32_t class_count() const { return k_; }
  std::uint64_t size() const { return log_unnormalized_.size(); }

  Labeling structure(std::uint64_t index) const {
    return structure_at(index, n_, k_);
  }
  std::vector<Labeling> structures() const {
    std::vector<Labeling> out;
    for (std::uint64_t s = 0; s < size(); ++s) out.push_back(structure(s));
    return out;
  }

  double log_unnormalized(std::uint64_t index) const {
    return log_unnormalized_[index];
  }
  const std::vector<double>& log_unnormalized() const {
    return log_unnormalized_;
  }
  double log_normalizer() const { return log_normalizer_; }
  double log_posterior(std::uint64_t index) const {
    return log_unnormalized_[index] - log_normalizer_;
  }
  double posterior(std::uint64_t index) const {
    return std::exp(log_posterior(index));
  }

  // Indices of all maximal structures, ascending (so the first is the
  // lexicographically smallest).
  std::vector<std::uint64_t> argmax_indices() const {
    double best = -std::numeric_limits<double>::infinity();
    for (double v : log_unnormalized_) best = std::max(best, v);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < size(); ++s) {
      if (log_weights_tied(log_unnormalized_[s], best)) out.push_back(s);
    }
    return out;
  }
  std::vector<Labeling> argmax() const {
    std::vector<Labeling> out;
    for (std::uint64_t s : argmax_indices()) out.push_back(structure(s));
    return out;
  }
  Labeling canonical_argmax() const { return structure(argmax_indices().front()); }

  // log of the sum of unnormalized weights over structures with S_i = c;
  // rows are items, columns classes.
  std::vector<std::vector<double>> log_unnormalized_marginals() const {
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : log_unnormalized_) hi = std::max(hi, v);
    std::vector<std::vector<double>> sums(n_, std::vector<double>(k_, 0.0));
    if (std::isfinite(hi)) {
      for (std::uint64_t s = 0; s < size(); ++s) {
        const double w = std::exp(log_unnormalized_[s] - hi);
        std::uint64_t index = s;
        for (std::size_t i = n_; i-- > 0;) {
          sums[i][index % k_] += w;
          index /= k_;
        }
      }
    }
    for (auto& row : sums) {
      for (double& v : row) {
        v = v > 0.0 ? hi + std::log(v)
                    : -std::numeric_limits<double>::infinity();
      }
    }
    return sums;
  }

  // Marginal label posteriors p(S_i = c | data).
  ItemPosteriors marginals() const {
    return make_item_posteriors(log_unnormalized_marginals(), k_);
  }

 private:
  std::size_t n_;
  std::uint32_t k_;
  std::vector<double> log_unnormalized_;
  double log_normalizer_;
};

// Evaluates `log_weight(labeling)` on every structure, in lexicographic
// order. The single enumeration engine behind both classification models.
template <typename LogWeightFn>
StructurePosterior enumerate_posterior(std::size_t n, std::uint32_t k,
                                       std::uint64_t cap,
                                       LogWeightFn&& log_weight) {
  const std::uint64_t count = checked_structure_count(n, k, cap);
  std::vector<double> weights;
  weights.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    weights.push_back(log_weight(structure_at(s, n, k)));
  }
  return StructurePosterior(n, k, std::move(weights));
}

}  // namespace predclass

#endif  // PREDCLASS_STRUCTURES_HPP_

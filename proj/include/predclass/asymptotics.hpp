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

#ifndef PREDCLASS_ASYMPTOTICS_HPP_
#define PREDCLASS_ASYMPTOTICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "predclass/counts.hpp"
#include "predclass/data.hpp"
#include "predclass/error.hpp"
#include "predclass/finite_model.hpp"
#include "predclass/label_prior.hpp"
#include "predclass/log_prob.hpp"
#include "predclass/partition_model.hpp"
#include "predclass/partition_vector.hpp"
#include "predclass/random.hpp"
#include "predclass/urn.hpp"

namespace predclass {

// Finite-alphabet data source: each class c draws feature j independently
// from the categorical distribution probabilities[c-1][j-1] over codes
// 1..r_j. Every category must have positive probability.
struct GeneratorSpec {
  std::uint32_t k = 2;
  std::size_t d = 2;
  std::vector<std::vector<std::vector<double>>> probabilities;
  std::uint64_t seed = 1;

  std::vector<std::uint32_t> alphabet_sizes() const {
    std::vector<std::uint32_t> r;
    for (std::size_t j = 0; j < d; ++j) {
      r.push_back(static_cast<std::uint32_t>(probabilities.at(0).at(j).size()));
    }
    return r;
  }

  void validate() const {
    if (probabilities.size() != k) {
      throw ConfigError("generator needs one distribution block per class");
    }
    for (std::uint32_t c = 0; c < k; ++c) {
      if (probabilities[c].size() != d) {
        throw ConfigError("generator needs one distribution per feature");
      }
      for (std::size_t j = 0; j < d; ++j) {
        const auto& p = probabilities[c][j];
        if (p.size() != probabilities[0][j].size()) {
          throw ConfigError("classes disagree on alphabet size");
        }
        double sum = 0.0;
        for (double v : p) {
          if (!(v > 0.0)) {
            throw HypothesisViolation(
                "generator has a zero-probability category (class " +
                std::to_string(c + 1) + ", feature " + std::to_string(j + 1) +
                ")");
          }
          sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
          throw ConfigError("generator distribution does not sum to 1");
        }
      }
    }
  }

  // Feature vector of one item from class c (1-based).
  std::vector<std::uint32_t> draw_item(std::uint32_t c, Rng& rng) const {
    std::vector<std::uint32_t> row(d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto& p = probabilities[c - 1][j];
      double u = rng.uniform();
      std::uint32_t l = 0;
      while (l + 1 < p.size() && u >= p[l]) u -= p[l++];
      row[j] = l + 1;
    }
    return row;
  }
};

// Mean absolute log-probability gap per grid point, with standard errors.
// `extra` carries experiment-specific per-grid-point columns.
struct GapSeries {
  std::string size_label = "size";
  std::vector<std::uint64_t> grid;
  std::vector<double> mean_gap;
  std::vector<double> std_error;
  std::vector<std::uint64_t> replicate_count;
  std::map<std::string, std::vector<double>> extra;

  bool strictly_decreasing() const {
    for (std::size_t g = 1; g < mean_gap.size(); ++g) {
      if (!(mean_gap[g] < mean_gap[g - 1])) return false;
    }
    return true;
  }

  // One row per grid point: size, mean gap, std error, replicates, extras.
  void write_tsv(std::ostream& out) const {
    out << size_label << "\tmean_gap\tstd_error\treplicates";
    for (const auto& [name, col] : extra) out << '\t' << name;
    out << '\n';
    char buf[64];
    for (std::size_t g = 0; g < grid.size(); ++g) {
      out << grid[g];
      std::snprintf(buf, sizeof buf, "\t%.15g\t%.15g", mean_gap[g],
                    std_error[g]);
      out << buf << '\t' << replicate_count[g];
      for (const auto& [name, col] : extra) {
        std::snprintf(buf, sizeof buf, "\t%.15g", col[g]);
        out << buf;
      }
      out << '\n';
    }
  }
};

namespace asymptotics_internal {

struct MeanAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t n = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
  double mean() const { return n ? sum / n : 0.0; }
  double std_error() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - n * m * m) / (n - 1);
    return std::sqrt(std::max(var, 0.0) / n);
  }
};

inline void check_grid(const std::vector<std::uint64_t>& grid) {
  if (grid.empty()) throw ConfigError("experiment grid is empty");
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (grid[g] <= grid[g - 1]) {
      throw ConfigError("experiment grid must be strictly increasing");
    }
  }
}

inline GapSeries make_series(std::string label,
                             const std::vector<std::uint64_t>& grid,
                             const std::vector<MeanAccumulator>& acc) {
  GapSeries s;
  s.size_label = std::move(label);
  s.grid = grid;
  for (const auto& a : acc) {
    s.mean_gap.push_back(a.mean());
    s.std_error.push_back(a.std_error());
    s.replicate_count.push_back(a.n);
  }
  return s;
}

// Labels 1, 2, ..., k, 1, 2, ... for n items.
inline Labeling cyclic_labels(std::size_t n, std::uint32_t k) {
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i % k) + 1;
  return Labeling(std::move(labels), k);
}

// Finite-model predictive of the test items, jointly and item by item.
inline double finite_gap(const FeatureTable& test, const Labeling& s,
                         const CountTensor& train,
                         const FiniteModelConfig& cfg) {
  const std::uint32_t k = train.class_count();
  const double joint =
      log_predictive_finite(count_frequencies(test, s), train, cfg).value();
  double product = 0.0;
  for (std::size_t i = 0; i < test.item_count(); ++i) {
    product +=
        log_predictive_finite(one_item_tensor(test.row(i), s[i], k), train, cfg)
            .value();
  }
  return std::abs(joint - product);
}

}  // namespace asymptotics_internal

// Two classes, two features over three categories each.
inline GeneratorSpec default_finite_generator() {
  GeneratorSpec g;
  g.k = 2;
  g.d = 2;
  g.probabilities = {{{0.5, 0.3, 0.2}, {0.2, 0.3, 0.5}},
                     {{0.2, 0.3, 0.5}, {0.6, 0.25, 0.15}}};
  g.seed = 20260101;
  return g;
}

struct Theorem1Config {
  GeneratorSpec generator = default_finite_generator();
  std::vector<std::uint64_t> m_grid = {10, 100, 1000, 10000};
  std::size_t n_test = 4;
  std::uint64_t replicates = 200;
};

// Growing training data: for each replicate, a fixed test set with fixed
// labels S (classes in rotation) is scored against nested training samples
// of m items per class. The gap is |log p(test | train, S) - sum_i log
// p(x_i | train, S_i)| under the finite model with lambda = 1/r_j.
inline GapSeries theorem1_experiment(const Theorem1Config& cfg) {
  const GeneratorSpec& gen = cfg.generator;
  gen.validate();
  asymptotics_internal::check_grid(cfg.m_grid);
  FiniteModelConfig model;
  model.alphabet_sizes = gen.alphabet_sizes();
  const Labeling s = asymptotics_internal::cyclic_labels(cfg.n_test, gen.k);
  std::vector<asymptotics_internal::MeanAccumulator> acc(cfg.m_grid.size());
  for (std::uint64_t rep = 0; rep < cfg.replicates; ++rep) {
    Rng rng(gen.seed, rep);
    FeatureTable test(gen.d);
    for (std::size_t i = 0; i < cfg.n_test; ++i) {
      test.add_row(gen.draw_item(s[i], rng));
    }
    CountTensor train(gen.k, gen.d);
    std::uint64_t have = 0;
    for (std::size_t g = 0; g < cfg.m_grid.size(); ++g) {
      for (; have < cfg.m_grid[g]; ++have) {
        for (std::uint32_t c = 1; c <= gen.k; ++c) {
          train.add_item(c, gen.draw_item(c, rng));
        }
      }
      acc[g].add(asymptotics_internal::finite_gap(test, s, train, model));
    }
  }
  return asymptotics_internal::make_series("m", cfg.m_grid, acc);
}

struct Theorem2Config {
  GeneratorSpec generator = default_finite_generator();
  std::vector<std::uint64_t> n_grid = {10, 100, 1000};
  std::size_t delta = 3;
  // Training items per class, held fixed across the grid.
  std::uint64_t m_per_class = 5;
  std::uint64_t replicates = 200;
};

// Growing labeled test history: n history items (classes in rotation) join
// a small fixed training set; a block of delta further items with random
// labels is then scored. The gap is |log p(x_block, s_block | history) -
// sum_t log p(x_t, s_t | history)|, label and data predictive together. The
// column spc_mdpc_agreement records the fraction of replicates in which the
// simultaneous and marginalized classifiers label the block identically.
inline GapSeries theorem2_experiment(const Theorem2Config& cfg) {
  const GeneratorSpec& gen = cfg.generator;
  gen.validate();
  asymptotics_internal::check_grid(cfg.n_grid);
  FiniteModelConfig model;
  model.alphabet_sizes = gen.alphabet_sizes();
  const auto beta = resolve_beta(model.beta, gen.k);
  std::vector<asymptotics_internal::MeanAccumulator> acc(cfg.n_grid.size());
  std::vector<asymptotics_internal::MeanAccumulator> agree(cfg.n_grid.size());
  for (std::uint64_t rep = 0; rep < cfg.replicates; ++rep) {
    Rng rng(gen.seed, rep);
    FeatureTable known(gen.d);
    std::vector<std::uint32_t> known_labels;
    for (std::uint64_t i = 0; i < cfg.m_per_class; ++i) {
      for (std::uint32_t c = 1; c <= gen.k; ++c) {
        known.add_row(gen.draw_item(c, rng));
        known_labels.push_back(c);
      }
    }
    FeatureTable block(gen.d);
    std::vector<std::uint32_t> block_label_vec;
    for (std::size_t t = 0; t < cfg.delta; ++t) {
      const auto c = static_cast<std::uint32_t>(rng.below(gen.k)) + 1;
      block.add_row(gen.draw_item(c, rng));
      block_label_vec.push_back(c);
    }
    const Labeling block_labels(block_label_vec, gen.k);
    std::uint64_t history = 0;
    for (std::size_t g = 0; g < cfg.n_grid.size(); ++g) {
      for (; history < cfg.n_grid[g]; ++history) {
        const auto c = static_cast<std::uint32_t>(history % gen.k) + 1;
        known.add_row(gen.draw_item(c, rng));
        known_labels.push_back(c);
      }
      const Labeling cond_labels(known_labels, gen.k);
      const CountTensor cond = count_frequencies(known, cond_labels);
      const auto cond_sizes = cond_labels.class_sizes();
      const double joint =
          log_predictive_finite(count_frequencies(block, block_labels), cond,
                                model)
              .value() +
          log_label_prior_from_sizes(block_labels.class_sizes(), cond_sizes,
                                     beta);
      double product = 0.0;
      for (std::size_t t = 0; t < cfg.delta; ++t) {
        std::vector<std::uint64_t> one(gen.k, 0);
        one[block_labels[t] - 1] = 1;
        product += log_predictive_finite(
                       one_item_tensor(block.row(t), block_labels[t], gen.k),
                       cond, model)
                       .value() +
                   log_label_prior_from_sizes(one, cond_sizes, beta);
      }
      acc[g].add(std::abs(joint - product));
      const StructurePosterior post =
          finite_structure_posterior(block, known, cond_labels, model);
      const Labeling spc = post.canonical_argmax();
      const Labeling mdpc = post.marginals().argmax;
      agree[g].add(spc == mdpc ? 1.0 : 0.0);
    }
  }
  GapSeries series = asymptotics_internal::make_series("n", cfg.n_grid, acc);
  auto& col = series.extra["spc_mdpc_agreement"];
  for (const auto& a : agree) col.push_back(a.mean());
  return series;
}

struct Theorem7Config {
  double psi = 5.0;
  std::uint32_t k = 2;
  std::size_t d = 2;
  std::vector<std::uint64_t> m_grid = {100, 1000, 10000};
  std::size_t n_test = 4;
  // Probability that a test item's first feature is replaced by a value
  // never seen before.
  double unique_value_fraction = 0.5;
  double epsilon = 0.1;
  std::uint64_t replicates = 400;
  std::uint64_t seed = 20260107;
};

// Partition-exchangeable data: every (class, feature) cell is an urn with
// mutator weight psi, so training statistics follow the Ewens law. Each
// class's codes are disjoint from the others'. Test items (classes in
// rotation) continue their class urns; some receive a planted novel value.
// The gap is |log p(test | train, S) - sum_i log p(x_i | train, S_i)|; the
// column fraction_above_epsilon is the share of replicates with gap >
// epsilon.
inline GapSeries theorem7_experiment(const Theorem7Config& cfg) {
  if (!(cfg.psi > 0.0)) throw DomainError("psi must be positive");
  asymptotics_internal::check_grid(cfg.m_grid);
  const Labeling s = asymptotics_internal::cyclic_labels(cfg.n_test, cfg.k);
  std::vector<asymptotics_internal::MeanAccumulator> acc(cfg.m_grid.size());
  std::vector<asymptotics_internal::MeanAccumulator> above(cfg.m_grid.size());
  for (std::uint64_t rep = 0; rep < cfg.replicates; ++rep) {
    for (std::size_t g = 0; g < cfg.m_grid.size(); ++g) {
      Rng rng(cfg.seed, rep * cfg.m_grid.size() + g);
      const std::uint64_t m = cfg.m_grid[g];
      std::vector<Urn> urns;
      for (std::size_t cell = 0; cell < cfg.k * cfg.d; ++cell) {
        urns.emplace_back(cfg.psi, 0);
      }
      auto code = [&](std::uint32_t c, std::uint64_t species) {
        return static_cast<std::uint32_t>(species * cfg.k + c);
      };
      auto draw = [&](std::uint32_t c) {
        std::vector<std::uint32_t> row(cfg.d);
        for (std::size_t j = 0; j < cfg.d; ++j) {
          row[j] = code(c, urns[(c - 1) * cfg.d + j].draw(rng));
        }
        return row;
      };
      CountTensor train(cfg.k, cfg.d);
      for (std::uint64_t i = 0; i < m; ++i) {
        for (std::uint32_t c = 1; c <= cfg.k; ++c) train.add_item(c, draw(c));
      }
      FeatureTable test(cfg.d);
      std::uint32_t next_novel = 0;
      for (std::size_t i = 0; i < cfg.n_test; ++i) {
        auto row = draw(s[i]);
        if (rng.uniform() < cfg.unique_value_fraction) {
          // Codes of the form k * (large) + c are never produced by the urns
          // at these sizes; the offset keeps planted values distinct.
          row[0] = code(s[i], (std::uint64_t{1} << 24) + next_novel++);
        }
        test.add_row(row);
      }
      const double joint =
          log_predictive_pe(count_frequencies(test, s), train, cfg.psi).value();
      const double product =
          pe_marginal_product(test, s, train, cfg.psi).value();
      const double gap = std::abs(joint - product);
      acc[g].add(gap);
      above[g].add(gap > cfg.epsilon ? 1.0 : 0.0);
    }
  }
  GapSeries series = asymptotics_internal::make_series("m", cfg.m_grid, acc);
  auto& col = series.extra["fraction_above_epsilon"];
  for (const auto& a : above) col.push_back(a.mean());
  return series;
}

struct Lemma1Result {
  // log p(test | train, S) - sum_i log p(x_i | train, S_i), exactly.
  double exact_gap = 0.0;
  // The same difference with only the partition-vector terms kept.
  double approx_gap = 0.0;
  double residual = 0.0;
};

// Compares the exact simultaneous-minus-marginal log predictive difference
// with its large-training-set approximation built from the combined
// partition vectors and, per test item, the training frequency t of each of
// its values:
//   sum_{c,j} { sum_t rho~_t log(psi/t) - sum_t rho_t log(psi/t)
//               - sum_t log rho~_t! + sum_t log rho_t!
//               + sum_{i in c} [log((t+1)/t) - log rho_t + log(rho_{t+1}+1)] }
// For a value unseen in training (t = 0) the item term is
// -log psi + log(rho_1 + 1).
inline Lemma1Result lemma1_check(const FeatureTable& train,
                                 const Labeling& train_labels,
                                 const FeatureTable& test, const Labeling& s,
                                 double psi) {
  if (!(psi > 0.0)) throw DomainError("psi must be positive");
  if (s.class_count() != train_labels.class_count()) {
    throw PairingError("lemma1_check: labelings use different k");
  }
  const CountTensor train_counts = count_frequencies(train, train_labels);
  const CountTensor test_counts = count_frequencies(test, s);
  Lemma1Result r;
  if (test.item_count() == 0) return r;
  r.exact_gap = log_predictive_pe(test_counts, train_counts, psi).value() -
                pe_marginal_product(test, s, train_counts, psi).value();
  const double log_psi = std::log(psi);
  double approx = 0.0;
  for (std::uint32_t c = 1; c <= train_counts.class_count(); ++c) {
    if (test_counts.class_size(c) == 0) continue;
    for (std::size_t j = 1; j <= train_counts.feature_count(); ++j) {
      const PartitionVector rho = partition_vector(train_counts, c, j);
      const PartitionVector combined =
          combined_partition_vector(train_counts, test_counts, c, j);
      for (const auto& [t, r_t] : combined.entries()) {
        approx += r_t * (log_psi - std::log(static_cast<double>(t))) -
                  log_factorial(r_t);
      }
      for (const auto& [t, r_t] : rho.entries()) {
        approx -= r_t * (log_psi - std::log(static_cast<double>(t))) -
                  log_factorial(r_t);
      }
      for (std::size_t i = 0; i < test.item_count(); ++i) {
        if (s[i] != c) continue;
        const std::uint64_t t = train_counts.count(c, j, test.at(i, j - 1));
        if (t == 0) {
          approx += -log_psi + std::log(static_cast<double>(rho[1] + 1));
          continue;
        }
        if (rho[t] == 0) {
          throw InconsistentStatistics(
              "lemma1_check: training frequency has no partition entry");
        }
        approx += std::log((t + 1.0) / t) -
                  std::log(static_cast<double>(rho[t])) +
                  std::log(static_cast<double>(rho[t + 1] + 1));
      }
    }
  }
  r.approx_gap = approx;
  r.residual = std::abs(r.exact_gap - r.approx_gap);
  return r;
}

// Effect of moving one test item from its class c1 to class c2, split the
// way the simultaneous log ratio separates: per feature, the change in the
// species terms sum_t rho~_t log(psi/t) of each class and in the
// log rho~_t! terms.
struct MoveItemDecomposition {
  struct Feature {
    double from_class_species = 0.0;  // c1: before minus after the move
    double to_class_species = 0.0;    // c2: before minus after the move
    double from_class_factorials = 0.0;
    double to_class_factorials = 0.0;
    double net() const {
      return from_class_species + to_class_species - from_class_factorials -
             to_class_factorials;
    }
  };
  std::vector<Feature> features;
  // log p(test | train, S) - log p(test | train, S') under both classifiers.
  double simultaneous_log_ratio = 0.0;
  double marginal_log_ratio = 0.0;
};

inline MoveItemDecomposition move_item_decomposition(
    const FeatureTable& train, const Labeling& train_labels,
    const FeatureTable& test, const Labeling& s, std::size_t item,
    std::uint32_t to_class, double psi) {
  if (item >= test.item_count()) throw IndexError("move_item: bad item");
  if (to_class < 1 || to_class > s.class_count()) {
    throw IndexError("move_item: bad class");
  }
  std::vector<std::uint32_t> moved = s.labels();
  const std::uint32_t from_class = moved[item];
  moved[item] = to_class;
  const Labeling s_moved(moved, s.class_count());
  const CountTensor train_counts = count_frequencies(train, train_labels);
  const CountTensor before = count_frequencies(test, s);
  const CountTensor after = count_frequencies(test, s_moved);
  const double log_psi = std::log(psi);
  auto species = [&](const PartitionVector& p) {
    double out = 0.0;
    for (const auto& [t, r] : p.entries()) {
      out += r * (log_psi - std::log(static_cast<double>(t)));
    }
    return out;
  };
  auto factorials = [](const PartitionVector& p) {
    double out = 0.0;
    for (const auto& [t, r] : p.entries()) out += log_factorial(r);
    return out;
  };
  MoveItemDecomposition out;
  for (std::size_t j = 1; j <= train_counts.feature_count(); ++j) {
    MoveItemDecomposition::Feature f;
    const auto b1 = combined_partition_vector(train_counts, before, from_class, j);
    const auto a1 = combined_partition_vector(train_counts, after, from_class, j);
    const auto b2 = combined_partition_vector(train_counts, before, to_class, j);
    const auto a2 = combined_partition_vector(train_counts, after, to_class, j);
    f.from_class_species = species(b1) - species(a1);
    f.to_class_species = species(b2) - species(a2);
    f.from_class_factorials = factorials(b1) - factorials(a1);
    f.to_class_factorials = factorials(b2) - factorials(a2);
    out.features.push_back(f);
  }
  out.simultaneous_log_ratio =
      log_predictive_pe(before, train_counts, psi).value() -
      log_predictive_pe(after, train_counts, psi).value();
  out.marginal_log_ratio =
      pe_marginal_product(test, s, train_counts, psi).value() -
      pe_marginal_product(test, s_moved, train_counts, psi).value();
  return out;
}

struct Lemma1SeriesConfig {
  double psi = 5.0;
  std::uint32_t k = 2;
  std::size_t d = 2;
  std::vector<std::uint64_t> m_grid = {50, 500, 5000};
  std::size_t n_test = 6;
  std::uint64_t seed = 20260104;
};

struct Lemma1Series {
  std::vector<std::uint64_t> grid;
  std::vector<Lemma1Result> results;

  bool residual_decreasing() const {
    for (std::size_t g = 1; g < results.size(); ++g) {
      if (!(results[g].residual < results[g - 1].residual)) return false;
    }
    return true;
  }
};

// One random instance family: a fixed test set whose training data grows
// through nested prefixes of per-(class, feature) urn samples.
inline Lemma1Series lemma1_series(const Lemma1SeriesConfig& cfg) {
  asymptotics_internal::check_grid(cfg.m_grid);
  Rng rng(cfg.seed, 0);
  std::vector<Urn> urns;
  for (std::size_t cell = 0; cell < cfg.k * cfg.d; ++cell) {
    urns.emplace_back(cfg.psi, 0);
  }
  auto draw = [&](std::uint32_t c) {
    std::vector<std::uint32_t> row(cfg.d);
    for (std::size_t j = 0; j < cfg.d; ++j) {
      row[j] = static_cast<std::uint32_t>(
          urns[(c - 1) * cfg.d + j].draw(rng) * cfg.k + c);
    }
    return row;
  };
  const Labeling s = asymptotics_internal::cyclic_labels(cfg.n_test, cfg.k);
  FeatureTable train(cfg.d);
  std::vector<std::uint32_t> train_labels;
  std::uint64_t have = 0;
  FeatureTable test(cfg.d);
  Lemma1Series out;
  for (std::size_t g = 0; g < cfg.m_grid.size(); ++g) {
    for (; have < cfg.m_grid[g]; ++have) {
      for (std::uint32_t c = 1; c <= cfg.k; ++c) {
        train.add_row(draw(c));
        train_labels.push_back(c);
      }
    }
    if (g == 0) {
      // The test set is drawn once, continuing the smallest training sample.
      Rng test_rng(cfg.seed, 1);
      std::vector<Urn> snapshot = urns;
      for (std::size_t i = 0; i < cfg.n_test; ++i) {
        std::vector<std::uint32_t> row(cfg.d);
        for (std::size_t j = 0; j < cfg.d; ++j) {
          row[j] = static_cast<std::uint32_t>(
              snapshot[(s[i] - 1) * cfg.d + j].draw(test_rng) * cfg.k + s[i]);
        }
        test.add_row(row);
      }
    }
    out.grid.push_back(cfg.m_grid[g]);
    out.results.push_back(lemma1_check(
        train, Labeling(train_labels, cfg.k), test, s, cfg.psi));
  }
  return out;
}

}  // namespace predclass

#endif  // PREDCLASS_ASYMPTOTICS_HPP_

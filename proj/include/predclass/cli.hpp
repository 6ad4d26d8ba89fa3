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

#ifndef PREDCLASS_CLI_HPP_
#define PREDCLASS_CLI_HPP_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "predclass/asymptotics.hpp"
#include "predclass/chi_square.hpp"
#include "predclass/csv.hpp"
#include "predclass/error.hpp"
#include "predclass/finite_model.hpp"
#include "predclass/integer_partitions.hpp"
#include "predclass/partition_model.hpp"
#include "predclass/report.hpp"
#include "predclass/succession.hpp"
#include "predclass/urn.hpp"
#include "predclass/version.hpp"

namespace predclass {

// Environment variable naming the configuration file used when --config is
// not given.
inline constexpr const char kConfigEnvVar[] = "PREDCLASS_CONFIG";

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitConfig = 4,
  kExitEnumerationCap = 5,
  kExitData = 6,
};

// Settings for a classification run. Filled from defaults, then a JSON
// configuration file, then a named preset, then command-line flags.
struct RunConfig {
  std::string model = "finite";      // finite | partition
  std::string classifier = "spc";    // mpc | spc | mdpc
  std::string lambda_mode = "uniform";  // uniform | constant
  double lambda = 1.0;
  std::vector<std::uint32_t> alphabet_sizes;
  bool infer_alphabet = true;
  std::vector<double> beta;
  std::optional<double> psi;
  std::string label_prior = "uniform";  // uniform | dirichlet (partition)
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> class_count;
  std::string train_path;
  std::string test_path;
  std::string output_path;
  std::uint64_t max_report_structures = 1024;

  void apply_preset(const std::string& name) {
    if (name == "example-3.2") {
      model = "finite";
      lambda_mode = "constant";
      lambda = 1.0;
      alphabet_sizes = {3, 3, 3, 3};
      beta = {1.0, 1.0};
    } else if (name == "example-5.1") {
      model = "partition";
      psi = 5.0;
      label_prior = "uniform";
    } else {
      throw ConfigError("unknown preset '" + name + "'");
    }
  }

  // Applies the keys of a JSON object. Relative paths are resolved against
  // `base_dir`. Unknown keys are rejected.
  void apply_json(const Json& j, const std::filesystem::path& base_dir = {}) {
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    if (j.contains("preset")) apply_preset(j.at("preset").get<std::string>());
    auto path = [&](const Json& v) {
      std::filesystem::path p = v.get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      return p.string();
    };
    try {
      for (const auto& [key, v] : j.items()) {
        if (key == "preset") continue;
        if (key == "model") model = v.get<std::string>();
        else if (key == "classifier") classifier = v.get<std::string>();
        else if (key == "lambda_mode") lambda_mode = v.get<std::string>();
        else if (key == "lambda") lambda = v.get<double>();
        else if (key == "alphabet_sizes") alphabet_sizes = v.get<std::vector<std::uint32_t>>();
        else if (key == "infer_alphabet") infer_alphabet = v.get<bool>();
        else if (key == "beta") beta = v.get<std::vector<double>>();
        else if (key == "psi") psi = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
        else if (key == "label_prior") label_prior = v.get<std::string>();
        else if (key == "enumeration_cap") enumeration_cap = v.get<std::uint64_t>();
        else if (key == "seed") seed = v.get<std::uint64_t>();
        else if (key == "class_count") class_count = v.is_null() ? std::nullopt : std::optional<std::uint32_t>(v.get<std::uint32_t>());
        else if (key == "train") train_path = path(v);
        else if (key == "test") test_path = path(v);
        else if (key == "output") output_path = path(v);
        else if (key == "max_report_structures") max_report_structures = v.get<std::uint64_t>();
        else throw ConfigError("unknown configuration key '" + key + "'");
      }
    } catch (const Json::exception& e) {
      throw ConfigError(std::string("configuration: ") + e.what());
    }
  }

  void load_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot read configuration '" + file + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw ConfigError("configuration '" + file + "': " + e.what());
    }
    apply_json(j, std::filesystem::path(file).parent_path());
  }

  void validate() const {
    if (model != "finite" && model != "partition") {
      throw ConfigError("model must be 'finite' or 'partition'");
    }
    if (classifier != "mpc" && classifier != "spc" && classifier != "mdpc") {
      throw ConfigError("classifier must be 'mpc', 'spc' or 'mdpc'");
    }
    if (model == "finite") {
      if (lambda_mode != "uniform" && lambda_mode != "constant") {
        throw ConfigError("lambda_mode must be 'uniform' or 'constant'");
      }
      if (alphabet_sizes.empty() && !infer_alphabet) {
        throw ConfigError("finite model needs alphabet_sizes or infer_alphabet");
      }
    } else {
      if (!psi) throw ConfigError("partition model requires psi");
      if (label_prior != "uniform" && label_prior != "dirichlet") {
        throw ConfigError("label_prior must be 'uniform' or 'dirichlet'");
      }
    }
    if (train_path.empty()) throw ConfigError("training table path missing");
    if (test_path.empty()) throw ConfigError("test table path missing");
  }

  FiniteModelConfig finite_config() const {
    FiniteModelConfig cfg;
    cfg.alphabet_sizes = alphabet_sizes;
    cfg.infer_alphabet = infer_alphabet;
    cfg.lambda_mode = lambda_mode == "constant"
                          ? FiniteModelConfig::LambdaMode::kConstant
                          : FiniteModelConfig::LambdaMode::kUniformOverAlphabet;
    cfg.lambda_constant = lambda;
    cfg.beta = beta;
    cfg.enumeration_cap = enumeration_cap;
    return cfg;
  }

  PartitionModelConfig partition_config() const {
    PartitionModelConfig cfg;
    cfg.psi = psi;
    cfg.enumeration_cap = enumeration_cap;
    cfg.label_prior =
        label_prior == "dirichlet"
            ? PartitionModelConfig::LabelPrior::kDirichletMultinomial
            : PartitionModelConfig::LabelPrior::kUniformOverStructures;
    cfg.beta = beta;
    return cfg;
  }

  Json to_json() const {
    Json j{{"model", model},
           {"classifier", classifier},
           {"enumeration_cap", enumeration_cap},
           {"seed", seed},
           {"train", train_path},
           {"test", test_path},
           {"output", output_path},
           {"max_report_structures", max_report_structures}};
    if (model == "finite") {
      j["lambda_mode"] = lambda_mode;
      j["lambda"] = lambda;
      j["alphabet_sizes"] = alphabet_sizes;
      j["infer_alphabet"] = infer_alphabet;
    } else {
      j["psi"] = psi ? Json(*psi) : Json(nullptr);
      j["label_prior"] = label_prior;
    }
    j["beta"] = beta;
    j["class_count"] = class_count ? Json(*class_count) : Json(nullptr);
    return j;
  }
};

// Runs the configured classifier and returns the report.
inline Json cmd_classify(const RunConfig& config) {
  config.validate();
  const LabeledTable train =
      ingest_table(config.train_path, LabelColumn::kPresent, config.class_count);
  const LabeledTable test = ingest_table(config.test_path, LabelColumn::kDetect);
  const Labeling& t = *train.labels;
  Json report = report_header("classify");
  Json echo = config.to_json();
  report["items"] = test.table.item_count();
  report["classes"] = t.class_count();

  if (config.model == "finite") {
    const FiniteModelConfig fc =
        resolve_alphabet(config.finite_config(), train.table, test.table);
    echo["alphabet_sizes"] = fc.alphabet_sizes;
    if (config.classifier == "mpc") {
      const ItemPosteriors p = mpc_classify(test.table, train.table, t, fc);
      report["argmax"] = labels_json(p.argmax);
      report["per_item"] = item_posteriors_json(p);
    } else {
      const StructurePosterior post =
          finite_structure_posterior(test.table, train.table, t, fc);
      const ItemPosteriors marg = post.marginals();
      report["argmax"] = labels_json(config.classifier == "spc"
                                         ? post.canonical_argmax()
                                         : marg.argmax);
      report["per_item"] = item_posteriors_json(marg);
      report["posterior"] =
          structure_posterior_json(post, config.max_report_structures);
      // log predictive of the test data under the argmax structure
      const Labeling best = config.classifier == "spc" ? post.canonical_argmax()
                                                       : marg.argmax;
      CountTensor train_counts(t.class_count(), fc.alphabet_sizes.size());
      if (train.table.item_count()) train_counts = count_frequencies(train.table, t);
      CountTensor test_counts(t.class_count(), fc.alphabet_sizes.size());
      for (std::size_t i = 0; i < test.table.item_count(); ++i) {
        test_counts.add_item(best[i], test.table.row(i));
      }
      report["log_predictive"] =
          log_linear(log_predictive_finite(test_counts, train_counts, fc).value());
    }
  } else {
    const PartitionModelConfig pc = config.partition_config();
    if (config.classifier == "mpc") {
      const PeMpcResult r = pe_mpc_classify(test.table, train.table, t, pc);
      report["argmax"] = labels_json(r.items.argmax);
      report["per_item"] = item_posteriors_json(r.items);
      report["log_predictive"] = log_linear(r.implied_log_predictive.value());
    } else {
      const StructurePosterior post =
          pe_structure_posterior(test.table, train.table, t, pc);
      const ItemPosteriors marg = post.marginals();
      const Labeling best = config.classifier == "spc" ? post.canonical_argmax()
                                                       : marg.argmax;
      report["argmax"] = labels_json(best);
      report["per_item"] = item_posteriors_json(marg);
      report["posterior"] =
          structure_posterior_json(post, config.max_report_structures);
      const std::size_t d = test.table.feature_count();
      CountTensor train_counts(t.class_count(), d);
      if (train.table.item_count()) train_counts = count_frequencies(train.table, t);
      CountTensor test_counts(t.class_count(), d);
      for (std::size_t i = 0; i < test.table.item_count(); ++i) {
        test_counts.add_item(best[i], test.table.row(i));
      }
      report["log_predictive"] = log_linear(
          log_predictive_pe(test_counts, train_counts, *pc.psi).value());
    }
  }
  report["config"] = std::move(echo);
  return report;
}

// Parameters of the succession calculators.
struct SuccessionParams {
  std::string rule;  // laplace | de-morgan | johnson | pd | beta-binomial |
                     // posterior | binomial
  std::vector<std::uint64_t> counts;
  std::optional<std::uint64_t> alphabet_size;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> theta;
  std::optional<std::uint64_t> successes;
  std::optional<std::uint64_t> trials;
};

// Full outcome distribution of the chosen rule.
inline Json cmd_succession(const SuccessionParams& p) {
  auto require = [&](const auto& opt, const char* name) {
    if (!opt) throw ConfigError(p.rule + " requires --" + std::string(name));
    return *opt;
  };
  Json report = report_header("succession");
  report["rule"] = p.rule;
  Json outcomes = Json::array();
  auto add = [&](Json outcome, double prob) {
    outcomes.push_back(Json{{"outcome", std::move(outcome)},
                            {"probability", round15(prob)}});
  };
  // Fixed-alphabet rules count unseen species in the alphabet as zeros.
  auto fixed_record = [&]() {
    std::vector<std::uint64_t> c = p.counts;
    if (p.alphabet_size) {
      if (*p.alphabet_size < c.size()) {
        throw DomainError("alphabet smaller than the number of counts");
      }
      c.resize(*p.alphabet_size, 0);
    }
    return FrequencyRecord::with_alphabet(std::move(c));
  };
  auto open_record = [&]() {
    std::vector<std::uint64_t> c;
    for (std::uint64_t n : p.counts) {
      if (n == 0) throw DomainError("observed species counts must be positive");
      c.push_back(n);
    }
    return FrequencyRecord(std::move(c));
  };
  if (p.rule == "laplace" || p.rule == "johnson") {
    const FrequencyRecord rec = fixed_record();
    if (rec.species() == 0) throw ConfigError(p.rule + " requires an alphabet");
    const double alpha = p.rule == "johnson" ? require(p.alpha, "alpha") : 1.0;
    for (std::uint64_t j = 1; j <= rec.species(); ++j) {
      add(j, p.rule == "laplace" ? laplace_rule(rec, j)
                                 : johnson_rule(rec, j, alpha));
    }
  } else if (p.rule == "de-morgan" || p.rule == "pd") {
    const FrequencyRecord rec = open_record();
    const double theta = p.rule == "pd" ? require(p.theta, "theta") : 1.0;
    for (std::uint64_t j = 1; j <= rec.species(); ++j) {
      add(j, p.rule == "pd" ? pd_succession(rec, Outcome::known(j), theta)
                            : de_morgan_rule(rec, Outcome::known(j)));
    }
    add("NEW", p.rule == "pd" ? pd_succession(rec, Outcome::novel(), theta)
                              : de_morgan_rule(rec, Outcome::novel()));
  } else if (p.rule == "beta-binomial" || p.rule == "binomial") {
    const std::uint64_t n = require(p.trials, "trials");
    const double a = require(p.alpha, "alpha");
    const double b = require(p.beta, "beta");
    for (std::uint64_t x = 0; x <= n; ++x) {
      add(x, p.rule == "binomial" ? heterogeneous_binomial_pmf(x, n, a, b)
                                  : beta_binomial_pmf(x, n, a, b));
    }
  } else if (p.rule == "posterior") {
    const std::uint64_t x = require(p.successes, "successes");
    const std::uint64_t n = require(p.trials, "trials");
    const double prob = posterior_succession(x, n, require(p.alpha, "alpha"),
                                             require(p.beta, "beta"));
    add("success", prob);
    add("failure", 1.0 - prob);
  } else {
    throw ConfigError("unknown rule '" + p.rule + "'");
  }
  report["outcomes"] = std::move(outcomes);
  Json params{{"counts", p.counts}};
  if (p.alphabet_size) params["alphabet_size"] = *p.alphabet_size;
  if (p.alpha) params["alpha"] = *p.alpha;
  if (p.beta) params["beta"] = *p.beta;
  if (p.theta) params["theta"] = *p.theta;
  if (p.successes) params["successes"] = *p.successes;
  if (p.trials) params["trials"] = *p.trials;
  report["config"] = std::move(params);
  return report;
}

struct UrnParams {
  std::uint64_t draws = 0;
  double theta = 1.0;
  std::uint64_t initial_colors = 0;
  std::uint64_t seed = 1;
  std::uint64_t replicates = 1;
};

struct CommandOutput {
  Json summary;
  // Tab-separated table accompanying the summary.
  std::string table;
};

// One replicate: species table (species, count). Several replicates:
// partition-shape frequencies against the Ewens probabilities (when d0 = 0),
// with a chi-square goodness-of-fit summary.
inline CommandOutput cmd_simulate_urn(const UrnParams& p) {
  if (p.replicates == 0) throw ConfigError("replicates must be >= 1");
  CommandOutput out;
  out.summary = report_header("simulate-urn");
  out.summary["config"] = Json{{"draws", p.draws},
                               {"theta", p.theta},
                               {"initial_colors", p.initial_colors},
                               {"seed", p.seed},
                               {"replicates", p.replicates}};
  std::ostringstream table;
  if (p.replicates == 1) {
    const UrnResult r = simulate_urn(p.draws, p.theta, p.initial_colors, p.seed);
    table << "species\tcount\n";
    for (std::size_t s = 0; s < r.state.species_counts.size(); ++s) {
      table << s + 1 << '\t' << r.state.species_counts[s] << '\n';
    }
    out.summary["species_counts"] = r.state.species_counts;
    Json rho = Json::object();
    for (const auto& [t, n] : r.partition.entries()) rho[std::to_string(t)] = n;
    out.summary["partition_vector"] = std::move(rho);
    out.summary["draw_count"] = r.state.draw_count;
  } else {
    const auto shapes = integer_partitions(p.draws);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      index[shapes[i].to_string()] = i;
    }
    std::vector<std::uint64_t> observed(shapes.size(), 0);
    for (std::uint64_t rep = 0; rep < p.replicates; ++rep) {
      const UrnResult r =
          simulate_urn(p.draws, p.theta, p.initial_colors, p.seed, rep);
      ++observed[index.at(r.partition.to_string())];
    }
    table << "partition\tobserved\tfrequency";
    if (p.initial_colors == 0) table << "\tewens_probability";
    table << '\n';
    std::vector<double> expected;
    char buf[64];
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      table << shapes[i].to_string() << '\t' << observed[i];
      std::snprintf(buf, sizeof buf, "\t%.15g",
                    static_cast<double>(observed[i]) / p.replicates);
      table << buf;
      if (p.initial_colors == 0) {
        expected.push_back(log_ewens(shapes[i], p.theta).linear());
        std::snprintf(buf, sizeof buf, "\t%.15g", expected.back());
        table << buf;
      }
      table << '\n';
    }
    if (p.initial_colors == 0) {
      const ChiSquareResult chi = chi_square_gof(observed, expected);
      out.summary["chi_square"] = Json{{"statistic", round15(chi.statistic)},
                                       {"degrees_of_freedom", chi.degrees_of_freedom},
                                       {"p_value", round15(chi.p_value)},
                                       {"bins", chi.bins}};
    }
  }
  out.table = table.str();
  return out;
}

struct ExperimentParams {
  std::string name;  // theorem1 | theorem2 | theorem7 | lemma1
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> replicates;
};

inline Json gap_series_json(const GapSeries& s) {
  Json rows = Json::array();
  for (std::size_t g = 0; g < s.grid.size(); ++g) {
    Json row{{s.size_label, s.grid[g]},
             {"mean_gap", round15(s.mean_gap[g])},
             {"std_error", round15(s.std_error[g])},
             {"replicates", s.replicate_count[g]}};
    for (const auto& [name, col] : s.extra) row[name] = round15(col[g]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CommandOutput cmd_experiment(const ExperimentParams& p) {
  CommandOutput out;
  out.summary = report_header("experiment");
  out.summary["experiment"] = p.name;
  std::ostringstream table;
  auto grid_json = [](const std::vector<std::uint64_t>& g) { return Json(g); };
  if (p.name == "theorem1") {
    Theorem1Config cfg;
    if (p.seed) cfg.generator.seed = *p.seed;
    if (p.replicates) cfg.replicates = *p.replicates;
    const GapSeries s = theorem1_experiment(cfg);
    s.write_tsv(table);
    out.summary["config"] = Json{{"seed", cfg.generator.seed},
                                 {"replicates", cfg.replicates},
                                 {"m_grid", grid_json(cfg.m_grid)},
                                 {"n_test", cfg.n_test},
                                 {"probabilities", cfg.generator.probabilities}};
    out.summary["series"] = gap_series_json(s);
    out.summary["strictly_decreasing"] = s.strictly_decreasing();
  } else if (p.name == "theorem2") {
    Theorem2Config cfg;
    if (p.seed) cfg.generator.seed = *p.seed;
    if (p.replicates) cfg.replicates = *p.replicates;
    const GapSeries s = theorem2_experiment(cfg);
    s.write_tsv(table);
    out.summary["config"] = Json{{"seed", cfg.generator.seed},
                                 {"replicates", cfg.replicates},
                                 {"n_grid", grid_json(cfg.n_grid)},
                                 {"delta", cfg.delta},
                                 {"m_per_class", cfg.m_per_class},
                                 {"probabilities", cfg.generator.probabilities}};
    out.summary["series"] = gap_series_json(s);
    out.summary["strictly_decreasing"] = s.strictly_decreasing();
  } else if (p.name == "theorem7") {
    Theorem7Config cfg;
    if (p.seed) cfg.seed = *p.seed;
    if (p.replicates) cfg.replicates = *p.replicates;
    const GapSeries s = theorem7_experiment(cfg);
    s.write_tsv(table);
    out.summary["config"] = Json{{"seed", cfg.seed},
                                 {"replicates", cfg.replicates},
                                 {"psi", cfg.psi},
                                 {"k", cfg.k},
                                 {"d", cfg.d},
                                 {"m_grid", grid_json(cfg.m_grid)},
                                 {"n_test", cfg.n_test},
                                 {"unique_value_fraction", cfg.unique_value_fraction},
                                 {"epsilon", cfg.epsilon}};
    out.summary["series"] = gap_series_json(s);
  } else if (p.name == "lemma1") {
    Lemma1SeriesConfig cfg;
    if (p.seed) cfg.seed = *p.seed;
    const Lemma1Series s = lemma1_series(cfg);
    table << "m\texact_gap\tapprox_gap\tresidual\n";
    Json rows = Json::array();
    char buf[96];
    for (std::size_t g = 0; g < s.grid.size(); ++g) {
      const Lemma1Result& r = s.results[g];
      std::snprintf(buf, sizeof buf, "\t%.15g\t%.15g\t%.15g\n", r.exact_gap,
                    r.approx_gap, r.residual);
      table << s.grid[g] << buf;
      rows.push_back(Json{{"m", s.grid[g]},
                          {"exact_gap", round15(r.exact_gap)},
                          {"approx_gap", round15(r.approx_gap)},
                          {"residual", round15(r.residual)}});
    }
    out.summary["config"] = Json{{"seed", cfg.seed},
                                 {"psi", cfg.psi},
                                 {"k", cfg.k},
                                 {"d", cfg.d},
                                 {"m_grid", grid_json(cfg.m_grid)},
                                 {"n_test", cfg.n_test}};
    out.summary["series"] = std::move(rows);
    out.summary["residual_decreasing"] = s.residual_decreasing();
  } else {
    throw ConfigError("unknown experiment '" + p.name + "'");
  }
  out.table = table.str();
  return out;
}

namespace cli_internal {

inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cli_internal

// Entry point of the predclass command-line tool. Returns the exit status.
inline int run_cli(int argc, char** argv) {
  CLI::App app{"Bayesian predictive classification of categorical data"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig run;
  std::string config_path;
  std::string preset;
  std::string lambda_mode, model, classifier, label_prior, train, test, output;
  std::optional<double> lambda, psi;
  std::vector<std::uint32_t> alphabet;
  std::vector<double> beta;
  std::optional<std::uint64_t> cap;
  std::optional<std::uint32_t> class_count;
  bool no_infer = false;
  auto* classify = app.add_subcommand("classify", "classify a test table");
  classify->add_option("--config", config_path,
                       std::string("JSON configuration (default: $") +
                           kConfigEnvVar + ")");
  classify->add_option("--preset", preset, "example-3.2 or example-5.1");
  classify->add_option("--model", model, "finite or partition");
  classify->add_option("--classifier", classifier, "mpc, spc or mdpc");
  classify->add_option("--train", train, "labeled training CSV");
  classify->add_option("--test", test, "test CSV");
  classify->add_option("--output,-o", output, "report path (default stdout)");
  classify->add_option("--lambda-mode", lambda_mode, "uniform or constant");
  classify->add_option("--lambda", lambda, "constant pseudo-count");
  classify->add_option("--alphabet", alphabet, "alphabet size per feature")
      ->delimiter(',');
  classify->add_flag("--no-infer-alphabet", no_infer,
                     "fail instead of inferring missing alphabet sizes");
  classify->add_option("--beta", beta, "class pseudo-counts")->delimiter(',');
  classify->add_option("--psi", psi, "partition model dispersion");
  classify->add_option("--label-prior", label_prior, "uniform or dirichlet");
  classify->add_option("--cap", cap, "maximum number of enumerated structures");
  classify->add_option("--classes", class_count, "number of classes k");

  SuccessionParams sp;
  auto* succession = app.add_subcommand("succession", "rules of succession");
  succession->add_option("--rule", sp.rule,
                         "laplace, de-morgan, johnson, pd, beta-binomial, "
                         "posterior or binomial")
      ->required();
  succession->add_option("--counts", sp.counts, "species counts")->delimiter(',');
  succession->add_option("--alphabet", sp.alphabet_size, "alphabet size d");
  succession->add_option("--alpha", sp.alpha);
  succession->add_option("--beta", sp.beta);
  succession->add_option("--theta", sp.theta);
  succession->add_option("--successes", sp.successes);
  succession->add_option("--trials", sp.trials);
  std::string succession_out;
  succession->add_option("--output,-o", succession_out);

  UrnParams up;
  std::string urn_out, urn_table;
  auto* urn = app.add_subcommand("simulate-urn", "De Morgan / Hoppe urn");
  urn->add_option("--draws", up.draws)->required();
  urn->add_option("--theta", up.theta, "mutator weight");
  urn->add_option("--initial-colors", up.initial_colors);
  urn->add_option("--seed", up.seed);
  urn->add_option("--replicates", up.replicates);
  urn->add_option("--output,-o", urn_out, "JSON summary path");
  urn->add_option("--table", urn_table, "TSV table path");

  ExperimentParams ep;
  std::string exp_dir;
  auto* experiment = app.add_subcommand("experiment", "asymptotic experiments");
  experiment->add_option("name", ep.name, "theorem1, theorem2, theorem7, lemma1")
      ->required();
  experiment->add_option("--seed", ep.seed);
  experiment->add_option("--replicates", ep.replicates);
  experiment->add_option("--output-dir", exp_dir,
                         "directory for <name>.tsv and <name>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) {
      if (config_path.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
          config_path = env;
        }
      }
      if (!config_path.empty()) run.load_file(config_path);
      if (!preset.empty()) run.apply_preset(preset);
      if (!model.empty()) run.model = model;
      if (!classifier.empty()) run.classifier = classifier;
      if (!train.empty()) run.train_path = train;
      if (!test.empty()) run.test_path = test;
      if (!output.empty()) run.output_path = output;
      if (!lambda_mode.empty()) run.lambda_mode = lambda_mode;
      if (lambda) run.lambda = *lambda;
      if (!alphabet.empty()) run.alphabet_sizes = alphabet;
      if (no_infer) run.infer_alphabet = false;
      if (!beta.empty()) run.beta = beta;
      if (psi) run.psi = psi;
      if (!label_prior.empty()) run.label_prior = label_prior;
      if (cap) run.enumeration_cap = *cap;
      if (class_count) run.class_count = class_count;
      cli_internal::write_text(run.output_path,
                               cli_internal::dump(cmd_classify(run)));
    } else if (*succession) {
      cli_internal::write_text(succession_out,
                               cli_internal::dump(cmd_succession(sp)));
    } else if (*urn) {
      const CommandOutput out = cmd_simulate_urn(up);
      if (!urn_table.empty()) cli_internal::write_text(urn_table, out.table);
      cli_internal::write_text(urn_out, cli_internal::dump(out.summary));
    } else if (*experiment) {
      const CommandOutput out = cmd_experiment(ep);
      if (exp_dir.empty()) {
        std::cout << out.table;
        std::cout << cli_internal::dump(out.summary);
      } else {
        std::filesystem::create_directories(exp_dir);
        const std::filesystem::path dir(exp_dir);
        cli_internal::write_text((dir / (ep.name + ".tsv")).string(), out.table);
        cli_internal::write_text((dir / (ep.name + ".json")).string(),
                                 cli_internal::dump(out.summary));
      }
    }
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEnumerationCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace predclass

#endif  // PREDCLASS_CLI_HPP_

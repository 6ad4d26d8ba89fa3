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

#ifndef PREDCLASS_REPORT_HPP_
#define PREDCLASS_REPORT_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "predclass/data.hpp"
#include "predclass/finite_model.hpp"
#include "predclass/structures.hpp"
#include "predclass/version.hpp"

namespace predclass {

using Json = nlohmann::ordered_json;

// x rounded to 15 significant digits. Non-finite values become the strings
// "inf", "-inf" and "nan", since JSON has no representation for them.
inline Json round15(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

// Reads back a number written by round15.
inline double json_number(const Json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "-inf") return -INFINITY;
    if (s == "inf") return INFINITY;
    return NAN;
  }
  return v.get<double>();
}

// A probability in both log and linear scale.
inline Json log_linear(double log_p) {
  return Json{{"log", round15(log_p)}, {"linear", round15(std::exp(log_p))}};
}

inline Json labels_json(const Labeling& s) { return s.labels(); }

inline Json item_posteriors_json(const ItemPosteriors& p) {
  Json items = Json::array();
  for (std::size_t i = 0; i < p.item_count(); ++i) {
    Json logs = Json::array();
    Json lin = Json::array();
    for (double v : p.log_posterior[i]) {
      logs.push_back(round15(v));
      lin.push_back(round15(std::exp(v)));
    }
    items.push_back(Json{{"item", i + 1},
                         {"argmax", p.argmax[i]},
                         {"tied", p.tied[i]},
                         {"log_posterior", std::move(logs)},
                         {"posterior", std::move(lin)}});
  }
  return items;
}

// Per-structure rows, at most `limit` of them in enumeration order.
inline Json structure_table_json(const StructurePosterior& post,
                                 std::uint64_t limit) {
  Json rows = Json::array();
  for (std::uint64_t s = 0; s < post.size() && s < limit; ++s) {
    rows.push_back(Json{{"labels", labels_json(post.structure(s))},
                        {"log_unnormalized", round15(post.log_unnormalized(s))},
                        {"log_posterior", round15(post.log_posterior(s))},
                        {"posterior", round15(post.posterior(s))}});
  }
  return rows;
}

inline Json structure_posterior_json(const StructurePosterior& post,
                                     std::uint64_t limit) {
  Json argmax = Json::array();
  for (const Labeling& s : post.argmax()) argmax.push_back(labels_json(s));
  return Json{{"structure_count", post.size()},
              {"log_normalizer", round15(post.log_normalizer())},
              {"canonical_argmax", labels_json(post.canonical_argmax())},
              {"tied_argmax", std::move(argmax)},
              {"structures", structure_table_json(post, limit)},
              {"structures_truncated", post.size() > limit}};
}

inline Json report_header(const std::string& command) {
  return Json{{"tool", "predclass"}, {"version", kVersion}, {"command", command}};
}

}  // namespace predclass

#endif  // PREDCLASS_REPORT_HPP_

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

#ifndef PREDCLASS_CHI_SQUARE_HPP_
#define PREDCLASS_CHI_SQUARE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "predclass/error.hpp"

namespace predclass {

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
  // Number of bins after pooling.
  std::size_t bins = 0;
};

// Pearson goodness-of-fit of `observed` counts against category
// `probabilities`. Categories whose expected count is below `min_expected`
// are pooled, smallest first, until every pooled bin reaches it.
inline ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                                      const std::vector<double>& probabilities,
                                      double min_expected = 5.0) {
  if (observed.size() != probabilities.size()) {
    throw PairingError("chi_square_gof: observed and expected differ in size");
  }
  const double n = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  struct Bin {
    double observed;
    double expected;
  };
  std::vector<Bin> bins;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    bins.push_back({static_cast<double>(observed[i]), n * probabilities[i]});
  }
  std::sort(bins.begin(), bins.end(), [](const Bin& a, const Bin& b) {
    return a.expected < b.expected;
  });
  // Merge the two smallest bins until the smallest is large enough.
  while (bins.size() > 1 && bins.front().expected < min_expected) {
    Bin merged{bins[0].observed + bins[1].observed,
               bins[0].expected + bins[1].expected};
    bins.erase(bins.begin(), bins.begin() + 2);
    auto pos = std::lower_bound(
        bins.begin(), bins.end(), merged,
        [](const Bin& a, const Bin& b) { return a.expected < b.expected; });
    bins.insert(pos, merged);
  }
  ChiSquareResult r;
  r.bins = bins.size();
  for (const Bin& b : bins) {
    const double diff = b.observed - b.expected;
    r.statistic += diff * diff / b.expected;
  }
  r.degrees_of_freedom = static_cast<int>(bins.size()) - 1;
  r.p_value = r.degrees_of_freedom > 0
                  ? boost::math::gamma_q(r.degrees_of_freedom / 2.0,
                                         r.statistic / 2.0)
                  : 1.0;
  return r;
}

}  // namespace predclass

#endif  // PREDCLASS_CHI_SQUARE_HPP_

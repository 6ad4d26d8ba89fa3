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

#ifndef PREDCLASS_URN_HPP_
#define PREDCLASS_URN_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "predclass/counts.hpp"
#include "predclass/error.hpp"
#include "predclass/partition_vector.hpp"
#include "predclass/random.hpp"

namespace predclass {

// State of a De Morgan / Hoppe urn. Species are numbered by first appearance;
// the d0 initial colors are species 1..d0, each backed by one phantom ball
// that is never counted as an observation.
struct UrnState {
  std::vector<std::uint64_t> species_counts;
  double mutator_weight = 1.0;
  std::uint64_t initial_colors = 0;
  std::uint64_t draw_count = 0;
};

struct UrnResult {
  UrnState state;
  PartitionVector partition;
};

// Incremental urn process. Each draw picks the mutator with probability
// theta / (N + d0 + theta), which adds a new species, or a ball uniformly at
// random, which adds one to that ball's species.
class Urn {
 public:
  Urn(double theta, std::uint64_t initial_colors) {
    if (!(theta > 0.0)) throw DomainError("urn: theta must be positive");
    state_.mutator_weight = theta;
    state_.initial_colors = initial_colors;
    state_.species_counts.assign(initial_colors, 0);
    for (std::uint64_t s = 0; s < initial_colors; ++s) balls_.push_back(s);
  }

  // Performs one draw and returns the 0-based species it produced.
  std::uint64_t draw(Rng& rng) {
    const double total =
        static_cast<double>(balls_.size()) + state_.mutator_weight;
    std::uint64_t species;
    if (rng.uniform() * total < state_.mutator_weight) {
      species = state_.species_counts.size();
      state_.species_counts.push_back(0);
    } else {
      species = balls_[rng.below(balls_.size())];
    }
    ++state_.species_counts[species];
    balls_.push_back(species);
    ++state_.draw_count;
    return species;
  }

  const UrnState& state() const { return state_; }

  PartitionVector partition() const {
    CountTensor::Cell cell;
    for (std::uint64_t s = 0; s < state_.species_counts.size(); ++s) {
      if (state_.species_counts[s] > 0) cell[s + 1] = state_.species_counts[s];
    }
    return PartitionVector::from_counts(cell);
  }

 private:
  UrnState state_;
  std::vector<std::uint64_t> balls_;
};

// Runs `draws` steps of the urn from a fresh state seeded by `seed`.
inline UrnResult simulate_urn(std::uint64_t draws, double theta,
                              std::uint64_t initial_colors, std::uint64_t seed,
                              std::uint64_t stream = 0) {
  Urn urn(theta, initial_colors);
  Rng rng(seed, stream);
  for (std::uint64_t i = 0; i < draws; ++i) urn.draw(rng);
  return {urn.state(), urn.partition()};
}

}  // namespace predclass

#endif  // PREDCLASS_URN_HPP_

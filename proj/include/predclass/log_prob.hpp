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

#ifndef PREDCLASS_LOG_PROB_HPP_
#define PREDCLASS_LOG_PROB_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "predclass/error.hpp"

namespace predclass {

// A probability held on the natural-log scale. Arithmetic on LogProb is
// multiplication/division of the underlying probabilities.
class LogProb {
 public:
  constexpr LogProb() = default;
  constexpr explicit LogProb(double value) : value_(value) {}

  static constexpr LogProb one() { return LogProb(0.0); }
  static constexpr LogProb zero() {
    return LogProb(-std::numeric_limits<double>::infinity());
  }
  static LogProb from_linear(double p) { return LogProb(std::log(p)); }

  constexpr double value() const { return value_; }
  double linear() const { return std::exp(value_); }

  constexpr LogProb& operator+=(LogProb o) {
    value_ += o.value_;
    return *this;
  }
  constexpr LogProb& operator-=(LogProb o) {
    value_ -= o.value_;
    return *this;
  }
  friend constexpr LogProb operator+(LogProb a, LogProb b) { return a += b; }
  friend constexpr LogProb operator-(LogProb a, LogProb b) { return a -= b; }
  friend constexpr auto operator<=>(LogProb a, LogProb b) {
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(LogProb a, LogProb b) = default;

 private:
  double value_ = 0.0;
};

// log(sum_i exp(v_i)), stable for any mix of finite and -inf inputs.
inline double log_sum_exp(std::span<const double> values) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : values) hi = std::max(hi, v);
  if (!std::isfinite(hi)) return hi;
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - hi);
  return hi + std::log(acc);
}

inline double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (!std::isfinite(a)) return a;
  return a + std::log1p(std::exp(b - a));
}

// Normalizes a vector of unnormalized log weights in place; returns the log
// normalizer.
inline double normalize_log(std::vector<double>& log_weights) {
  const double z = log_sum_exp(log_weights);
  for (double& v : log_weights) v -= z;
  return z;
}

// log(x (x+1) ... (x+n-1)). Short products are formed directly in chunks
// that stay far from overflow; long ones go through log-gamma.
inline double log_rising_factorial(double x, std::uint64_t n) {
  if (!(x > 0.0)) {
    throw DomainError("log_rising_factorial: x must be positive, got " +
                      std::to_string(x));
  }
  if (n == 0) return 0.0;
  if (n > 256) return std::lgamma(x + static_cast<double>(n)) - std::lgamma(x);
  double log_acc = 0.0;
  double chunk = 1.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    chunk *= x + static_cast<double>(i);
    if (chunk > 1e280 || chunk < 1e-280) {
      log_acc += std::log(chunk);
      chunk = 1.0;
    }
  }
  return log_acc + std::log(chunk);
}

// log(n!)
inline double log_factorial(std::uint64_t n) {
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace predclass

#endif  // PREDCLASS_LOG_PROB_HPP_

// Copyright 2026 The ledpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEDP_LEVEL_PARAMS_HPP_
#define LEDP_LEVEL_PARAMS_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "ledp/errors.hpp"

namespace ledp {

// User-facing knobs of the level data structure.
struct LevelConfig {
  double psi = 0.5;
  double lambda = 0.25;
  // Approximation parameter; only used to report or derive lambda.
  double eta = 0.5;
  // Divide by 4 ceil(log n) instead of the group size when estimating.
  bool strict_estimate = false;

  void Validate() const {
    if (!(psi > 0 && psi < 1)) throw DomainError("psi must lie in (0, 1)");
    if (!(lambda > 0 && lambda < 1)) {
      throw DomainError("lambda must lie in (0, 1)");
    }
    if (!(eta > 0) || !std::isfinite(eta)) {
      throw DomainError("eta must be positive");
    }
  }
};

// The coupling lambda = 2/9 (2 eta - 5). It is negative for every eta < 5/2
// and is therefore never applied by default.
inline double LambdaFromEta(double eta) { return 2.0 / 9.0 * (2 * eta - 5); }

// Level layout for a graph on n >= 2 nodes: 2L groups of 2L levels each,
// where L = ceil(log_{1+psi} n).
class LevelParams {
 public:
  LevelParams(std::int64_t n, const LevelConfig& config) : config_(config) {
    config.Validate();
    if (n < 2) {
      throw DegenerateInputError("level structure needs n >= 2");
    }
    n_ = n;
    // Smallest L with (1+psi)^L >= n, by repeated multiplication so that
    // exact powers are not lost to rounding in log().
    double p = 1.0;
    log_n_ = 0;
    while (p < static_cast<double>(n)) {
      p *= 1 + config.psi;
      ++log_n_;
    }
    levels_per_group_ = 2 * log_n_;
    groups_ = 2 * log_n_;
    total_levels_ = groups_ * levels_per_group_;
    thresholds_.resize(groups_);
    double t = 1.0;
    for (std::int64_t g = 0; g < groups_; ++g) {
      thresholds_[g] = t;
      t *= 1 + config.psi;
    }
  }

  std::int64_t n() const { return n_; }
  const LevelConfig& config() const { return config_; }
  double psi() const { return config_.psi; }
  double lambda() const { return config_.lambda; }
  // ceil(log_{1+psi} n).
  std::int64_t log_n() const { return log_n_; }
  std::int64_t levels_per_group() const { return levels_per_group_; }
  std::int64_t groups() const { return groups_; }
  std::int64_t total_levels() const { return total_levels_; }

  std::int64_t GroupOf(std::int64_t level) const {
    return level / levels_per_group_;
  }
  // (1+psi)^g.
  double GroupThreshold(std::int64_t g) const { return thresholds_[g]; }
  // (1+psi)^{F(r)}.
  double LevelThreshold(std::int64_t level) const {
    return thresholds_[GroupOf(level)];
  }

  // Real-valued log_{1+psi} n.
  double LogBase() const {
    return std::log(static_cast<double>(n_)) / std::log1p(config_.psi);
  }

 private:
  LevelConfig config_;
  std::int64_t n_ = 0;
  std::int64_t log_n_ = 0;
  std::int64_t levels_per_group_ = 0;
  std::int64_t groups_ = 0;
  std::int64_t total_levels_ = 0;
  std::vector<double> thresholds_;
};

}  // namespace ledp

#endif  // LEDP_LEVEL_PARAMS_HPP_

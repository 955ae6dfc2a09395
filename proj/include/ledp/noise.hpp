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

#ifndef LEDP_NOISE_HPP_
#define LEDP_NOISE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <vector>

#include "ledp/errors.hpp"
#include "ledp/rng.hpp"

namespace ledp {

// Parameter b of the symmetric geometric distribution Geom(b).
class GeomParam {
 public:
  explicit GeomParam(double b) : b_(b) {
    if (!(b > 0) || !std::isfinite(b)) {
      throw DomainError("Geom parameter must be positive and finite");
    }
  }
  double b() const { return b_; }

 private:
  double b_;
};

// P(X = i) = ((e^b - 1) / (e^b + 1)) e^{-|i| b}.
inline double GeomPmf(const GeomParam& p, std::int64_t i) {
  double b = p.b();
  return std::tanh(b / 2) * std::exp(-static_cast<double>(std::llabs(i)) * b);
}

// Zero with probability tanh(b/2); otherwise a fair sign times a geometric
// magnitude M >= 1 with P(M > k) = e^{-kb}, drawn by inverse CDF.
inline std::int64_t SampleSymmetricGeom(const GeomParam& p, RngStream& rng) {
  double b = p.b();
  double u0 = rng.UniformOpen1();
  if (u0 < std::tanh(b / 2)) return 0;
  bool negative = (rng() >> 63) != 0;
  double tail = -std::log(rng.UniformOpen0()) / b;
  constexpr double kCap = 4.0e18;
  std::int64_t mag = 1 + static_cast<std::int64_t>(std::min(tail, kCap));
  return negative ? -mag : mag;
}

inline std::int64_t GeometricMechanism(std::int64_t value,
                                       std::int64_t sensitivity,
                                       double epsilon, RngStream& rng) {
  if (sensitivity < 1) throw DomainError("sensitivity must be >= 1");
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  return value +
         SampleSymmetricGeom(GeomParam(epsilon / static_cast<double>(sensitivity)),
                             rng);
}

// ceil(c ln n / b): |X| stays below this except with probability about
// n^{-c}.
inline std::int64_t WhpNoiseBound(const GeomParam& p, std::int64_t n,
                                  double c) {
  if (n < 2) throw DomainError("whp noise bound needs n >= 2");
  if (!(c >= 1)) throw DomainError("whp noise bound needs c >= 1");
  return static_cast<std::int64_t>(
      std::ceil(c * std::log(static_cast<double>(n)) / p.b()));
}

struct NoiseRecord {
  StreamLabel label;
  double b;
  std::int64_t value;
};

// Draws labeled noise for one run. In noiseless mode every draw is 0. With
// debug logging on, draws are recorded; such logs are not private.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed, bool noiseless = false,
                       bool debug_nonprivate = false)
      : seed_(seed), noiseless_(noiseless), debug_(debug_nonprivate) {}

  std::int64_t Draw(double b, const StreamLabel& label) {
    GeomParam param(b);
    std::int64_t x = 0;
    if (!noiseless_) {
      RngStream rng(seed_, label);
      x = SampleSymmetricGeom(param, rng);
    }
    if (debug_) {
      log_.push_back({label, b, x});
      max_abs_ = std::max(max_abs_, x < 0 ? -x : x);
    }
    return x;
  }

  std::uint64_t seed() const { return seed_; }
  bool noiseless() const { return noiseless_; }
  bool debug_nonprivate() const { return debug_; }
  const std::vector<NoiseRecord>& log() const { return log_; }
  std::int64_t max_abs_noise() const { return max_abs_; }

 private:
  std::uint64_t seed_;
  bool noiseless_;
  bool debug_;
  std::vector<NoiseRecord> log_;
  std::int64_t max_abs_ = 0;
};

}  // namespace ledp

#endif  // LEDP_NOISE_HPP_

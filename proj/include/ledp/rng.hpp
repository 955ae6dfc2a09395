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

#ifndef LEDP_RNG_HPP_
#define LEDP_RNG_HPP_

#include <cstdint>
#include <limits>

namespace ledp {

enum class Channel : std::uint32_t {
  kCoreCount = 1,
  kFastCount = 2,
  kDensestDegree = 3,
  kMwuLoad = 4,
  kMwuMember = 5,
  kMwuDensity = 6,
  kLaNeighborCount = 7,
  kLaEdgeCount = 8,
  kLaStopS = 9,
  kLaStopT = 10,
  kLaGlobalS = 11,
  kLaGlobalT = 12,
  kLaOut = 13,
  kLaGlobalOut = 14,
  kSmoke = 15,
  kTest = 16,
};

// Identifies one noise draw. `sub` disambiguates draws that share
// (round, node, channel), such as per-group copies.
struct StreamLabel {
  std::uint64_t round = 0;
  std::uint64_t node = 0;
  Channel channel = Channel::kTest;
  std::uint64_t sub = 0;
};

inline constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t HashCombine(std::uint64_t h, std::uint64_t v) {
  return SplitMix64(h ^ SplitMix64(v));
}

// Counter-based generator keyed by (seed, label). Satisfies
// UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, const StreamLabel& label) {
    std::uint64_t h = SplitMix64(seed);
    h = HashCombine(h, label.round);
    h = HashCombine(h, label.node);
    h = HashCombine(h, static_cast<std::uint64_t>(label.channel));
    h = HashCombine(h, label.sub);
    state_ = h;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 bits.
  double UniformOpen1() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  // Uniform on (0, 1] with 53 bits.
  double UniformOpen0() {
    return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ledp

#endif  // LEDP_RNG_HPP_

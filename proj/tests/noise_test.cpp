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

#include "ledp/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "ledp/errors.hpp"
#include "ledp/rng.hpp"

namespace ledp {
namespace {

// Independent pmf: normalizing constant summed numerically.
double ReferencePmf(double b, std::int64_t i) {
  double z = 1;
  for (int k = 1; k < 20000; ++k) z += 2 * std::exp(-b * k);
  return std::exp(-b * static_cast<double>(std::llabs(i))) / z;
}

TEST(GeomPmfTest, FrozenValuesAtLn2) {
  GeomParam p(std::log(2.0));
  EXPECT_NEAR(GeomPmf(p, 0), 1.0 / 3, 1e-12);
  EXPECT_NEAR(GeomPmf(p, 1), 1.0 / 6, 1e-12);
  EXPECT_NEAR(GeomPmf(p, -1), 1.0 / 6, 1e-12);
  EXPECT_NEAR(GeomPmf(p, 2), 1.0 / 12, 1e-12);
}

TEST(GeomPmfTest, MatchesNumericNormalization) {
  for (double b : {0.05, 0.3, 1.0, 2.5}) {
    GeomParam p(b);
    for (std::int64_t i = -5; i <= 5; ++i) {
      EXPECT_NEAR(GeomPmf(p, i), ReferencePmf(b, i), 1e-9) << b << " " << i;
    }
  }
}

TEST(GeomParamTest, RejectsBadParameters) {
  EXPECT_THROW(GeomParam(0.0), DomainError);
  EXPECT_THROW(GeomParam(-1.0), DomainError);
  EXPECT_THROW(GeomParam{std::numeric_limits<double>::infinity()}, DomainError);
  EXPECT_THROW(GeomParam{std::nan("")}, DomainError);
}

TEST(SampleSymmetricGeomTest, ChiSquareAgainstPmf) {
  const double b = std::log(2.0);
  GeomParam p(b);
  const int kDraws = 200000;
  const std::int64_t kCut = 6;
  std::map<std::int64_t, int> counts;
  for (int t = 0; t < kDraws; ++t) {
    RngStream rng(11, {0, static_cast<std::uint64_t>(t), Channel::kTest, 0});
    std::int64_t x = SampleSymmetricGeom(p, rng);
    counts[std::clamp<std::int64_t>(x, -kCut, kCut)]++;
  }
  double chi2 = 0;
  double tail = 0;
  for (std::int64_t i = -kCut + 1; i < kCut; ++i) tail += ReferencePmf(b, i);
  tail = (1 - tail) / 2;
  for (std::int64_t i = -kCut; i <= kCut; ++i) {
    double q = std::llabs(i) == kCut ? tail : ReferencePmf(b, i);
    double expected = q * kDraws;
    double diff = counts[i] - expected;
    chi2 += diff * diff / expected;
  }
  // 12 degrees of freedom; 40 is far beyond the 0.9999 quantile.
  EXPECT_LT(chi2, 40.0);
}

TEST(SampleSymmetricGeomTest, TailMatchesClosedForm) {
  const double b = 0.2;
  GeomParam p(b);
  const int kDraws = 200000;
  const std::int64_t k = 10;
  int hits = 0;
  for (int t = 0; t < kDraws; ++t) {
    RngStream rng(3, {1, static_cast<std::uint64_t>(t), Channel::kTest, 0});
    hits += std::llabs(SampleSymmetricGeom(p, rng)) >= k;
  }
  // P(|X| >= k) = 2 tanh(b/2) e^{-kb} / (1 - e^{-b}).
  double q = 2 * std::tanh(b / 2) * std::exp(-k * b) / (1 - std::exp(-b));
  double sd = std::sqrt(q * (1 - q) / kDraws);
  EXPECT_NEAR(static_cast<double>(hits) / kDraws, q, 5 * sd);
}

TEST(SampleSymmetricGeomTest, SymmetricMeanNearZero) {
  GeomParam p(0.5);
  double sum = 0;
  const int kDraws = 100000;
  for (int t = 0; t < kDraws; ++t) {
    RngStream rng(8, {2, static_cast<std::uint64_t>(t), Channel::kTest, 0});
    sum += static_cast<double>(SampleSymmetricGeom(p, rng));
  }
  // Var = 2 e^{-b} / (1 - e^{-b})^2.
  double var = 2 * std::exp(-0.5) / std::pow(1 - std::exp(-0.5), 2);
  EXPECT_NEAR(sum / kDraws, 0.0, 5 * std::sqrt(var / kDraws));
}

TEST(SampleSymmetricGeomTest, HugeParameterIsAlmostAlwaysZero) {
  GeomParam p(60.0);
  for (int t = 0; t < 1000; ++t) {
    RngStream rng(1, {0, static_cast<std::uint64_t>(t), Channel::kTest, 0});
    EXPECT_EQ(SampleSymmetricGeom(p, rng), 0);
  }
}

TEST(GeometricMechanismTest, ValidatesArguments) {
  RngStream rng(1, {});
  EXPECT_THROW(GeometricMechanism(3, 0, 1.0, rng), DomainError);
  EXPECT_THROW(GeometricMechanism(3, 1, 0.0, rng), DomainError);
  EXPECT_THROW(GeometricMechanism(3, 1, -2.0, rng), DomainError);
}

TEST(GeometricMechanismTest, NoiseUsesEpsilonOverSensitivity) {
  // Same stream, scale eps/s, must match a direct draw at that scale.
  for (std::uint64_t t = 0; t < 100; ++t) {
    RngStream a(4, {t, 0, Channel::kTest, 0});
    RngStream b(4, {t, 0, Channel::kTest, 0});
    EXPECT_EQ(GeometricMechanism(10, 2, 1.0, a) - 10,
              SampleSymmetricGeom(GeomParam(0.5), b));
  }
}

TEST(WhpNoiseBoundTest, FrozenValues) {
  EXPECT_EQ(WhpNoiseBound(GeomParam(1.0), 55, 1.0), 5);
  EXPECT_EQ(WhpNoiseBound(GeomParam(2.0), 55, 1.0), 3);
  EXPECT_EQ(WhpNoiseBound(GeomParam(std::log(2.0)), 2, 1.0), 1);
  EXPECT_EQ(WhpNoiseBound(GeomParam(1.0), 100, 2.0),
            static_cast<std::int64_t>(std::ceil(2 * std::log(100.0))));
}

TEST(WhpNoiseBoundTest, RejectsDegenerateInputs) {
  EXPECT_THROW(WhpNoiseBound(GeomParam(1.0), 1, 1.0), DomainError);
  EXPECT_THROW(WhpNoiseBound(GeomParam(1.0), 10, 0.5), DomainError);
}

TEST(WhpNoiseBoundTest, ExceedanceIsRare) {
  const double b = 0.4;
  const std::int64_t n = 1000;
  std::int64_t bound = WhpNoiseBound(GeomParam(b), n, 1.0);
  int over = 0;
  const int kDraws = 100000;
  for (int t = 0; t < kDraws; ++t) {
    RngStream rng(2, {3, static_cast<std::uint64_t>(t), Channel::kTest, 0});
    over += std::llabs(SampleSymmetricGeom(GeomParam(b), rng)) > bound;
  }
  // P(|X| > c ln n / b) <= 2 n^{-c} / (e^b + 1) < 1/n.
  EXPECT_LT(static_cast<double>(over) / kDraws, 1.0 / n);
}

TEST(RngStreamTest, LabelsAreIndependentStreams) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t r = 0; r < 10; ++r) {
    for (std::uint64_t v = 0; v < 10; ++v) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        RngStream rng(7, {r, v, Channel::kCoreCount, s});
        firsts.insert(rng());
      }
    }
  }
  EXPECT_EQ(firsts.size(), 300u);
  RngStream a(7, {1, 2, Channel::kCoreCount, 0});
  RngStream b(7, {1, 2, Channel::kCoreCount, 0});
  RngStream c(8, {1, 2, Channel::kCoreCount, 0});
  RngStream d(7, {1, 2, Channel::kFastCount, 0});
  std::uint64_t x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(RngStreamTest, UniformRanges) {
  RngStream rng(5, {});
  for (int t = 0; t < 10000; ++t) {
    double u = rng.UniformOpen1();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    double w = rng.UniformOpen0();
    EXPECT_GT(w, 0.0);
    EXPECT_LE(w, 1.0);
  }
}

TEST(NoiseSourceTest, NoiselessReturnsZeroButValidates) {
  NoiseSource src(1, /*noiseless=*/true);
  for (std::uint64_t t = 0; t < 100; ++t) {
    EXPECT_EQ(src.Draw(0.01, {t, 0, Channel::kTest, 0}), 0);
  }
  EXPECT_THROW(src.Draw(0.0, {}), DomainError);
}

TEST(NoiseSourceTest, DeterministicPerLabel) {
  NoiseSource a(9), b(9);
  StreamLabel l{4, 5, Channel::kCoreCount, 1};
  EXPECT_EQ(a.Draw(0.1, l), b.Draw(0.1, l));
  EXPECT_EQ(a.Draw(0.1, l), a.Draw(0.1, l));
}

TEST(NoiseSourceTest, DebugLogTracksDraws) {
  NoiseSource plain(3);
  plain.Draw(0.1, {});
  EXPECT_TRUE(plain.log().empty());
  EXPECT_EQ(plain.max_abs_noise(), 0);

  NoiseSource dbg(3, false, true);
  std::int64_t m = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    std::int64_t x = dbg.Draw(0.1, {t, 0, Channel::kTest, 0});
    m = std::max<std::int64_t>(m, std::llabs(x));
  }
  EXPECT_EQ(dbg.log().size(), 50u);
  EXPECT_EQ(dbg.max_abs_noise(), m);
  EXPECT_GT(m, 0);
}

}  // namespace
}  // namespace ledp

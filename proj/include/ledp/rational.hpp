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

#ifndef LEDP_RATIONAL_HPP_
#define LEDP_RATIONAL_HPP_

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ledp/errors.hpp"

namespace ledp {

// Exact rational with 64-bit parts. Comparisons widen to 128 bits, so any
// two values with parts below 2^63 compare exactly.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Normalize();
  }

  // Nearest multiple of 1/scale to x.
  static Rational Approximate(double x, std::int64_t scale = 1000000000) {
    if (!std::isfinite(x)) throw DomainError("non-finite rational source");
    return Rational(static_cast<std::int64_t>(std::llround(x * scale)), scale);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string ToString() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return FromWide(static_cast<__int128>(a.num_) * b.den_ +
                        static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return FromWide(static_cast<__int128>(a.num_) * b.num_,
                    static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return FromWide(static_cast<__int128>(a.num_) * b.den_,
                    static_cast<__int128>(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  static Rational FromWide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (num > kMax || -num > kMax || den > kMax) {
      throw DomainError("rational overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void Normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ledp

#endif  // LEDP_RATIONAL_HPP_

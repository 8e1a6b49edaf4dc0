// Copyright 2026 The LHIP Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LHIP_RATIONAL_HPP_
#define LHIP_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

namespace lhip {

/// Exact fraction. Thresholds, coverage ratios and confidence factors are
/// kept as rationals so comparisons like 3/4 >= 0.75 never suffer float
/// drift. Always normalized: den > 0, gcd(|num|, den) == 1.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / den_; }

  /// Accepts "3", "-2", "0.75", "1.0", ".5", "3/4".
  static std::optional<Rational> parse(std::string_view text);

  /// Canonical text: integers as "N", powers-of-ten denominators as exact
  /// decimals ("0.3", "1.25"), anything else as "N/D". Round-trips through
  /// parse().
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  static Rational min(const Rational& a, const Rational& b) {
    return a < b ? a : b;
  }

 private:
  int64_t num_;
  int64_t den_;
};

}  // namespace lhip

#endif  // LHIP_RATIONAL_HPP_

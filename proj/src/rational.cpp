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

#include "lhip/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace lhip {

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  size_t pos = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    pos = 1;
  }
  int64_t intpart = 0;
  bool any = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    intpart = intpart * 10 + (text[pos] - '0');
    ++pos;
    any = true;
  }
  if (pos == text.size()) {
    if (!any) return std::nullopt;
    return Rational(neg ? -intpart : intpart);
  }
  if (text[pos] == '/') {
    ++pos;
    int64_t den = 0;
    bool dany = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      den = den * 10 + (text[pos] - '0');
      ++pos;
      dany = true;
    }
    if (!any || !dany || pos != text.size() || den == 0) return std::nullopt;
    return Rational(neg ? -intpart : intpart, den);
  }
  if (text[pos] == '.') {
    ++pos;
    int64_t frac = 0, scale = 1;
    bool fany = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (scale <= 100000000000000000LL) {
        frac = frac * 10 + (text[pos] - '0');
        scale *= 10;
      }
      ++pos;
      fany = true;
    }
    if (pos != text.size() || (!any && !fany)) return std::nullopt;
    int64_t n = intpart * scale + frac;
    return Rational(neg ? -n : n, scale);
  }
  return std::nullopt;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  // exact decimal when the denominator is 2^a * 5^b
  int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  int digits = twos > fives ? twos : fives;
  __int128 scaled = num_;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= den_;
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s;
  for (int i = 0; i < digits; ++i) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  std::string whole = scaled == 0 ? "0" : "";
  while (scaled > 0) {
    whole.insert(whole.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  return (neg ? "-" : "") + whole + "." + s;
}

}  // namespace lhip

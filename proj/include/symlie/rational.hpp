/* Copyright 2026 The symlie Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace symlie {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Arithmetic that
/// would overflow throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool isZero() const noexcept { return num_ == 0; }
  bool isOne() const noexcept { return num_ == 1 && den_ == 1; }
  bool isInteger() const noexcept { return den_ == 1; }
  bool isNegative() const noexcept { return num_ < 0; }

  double toDouble() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string toString() const;

  Rational operator-() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Integer power; the exponent must fit comfortably (|n| <= 64).
  Rational pow(std::int64_t n) const;

  /// Best rational approximation with denominator <= maxDen, accepted only
  /// if it reproduces v within tol. Returns false otherwise.
  static bool fromDouble(double v, std::int64_t maxDen, double tol, Rational& out);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace symlie

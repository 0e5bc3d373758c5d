// Copyright 2026 The numview Authors
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

#ifndef NUMVIEW_RATIONAL_H_
#define NUMVIEW_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace numview {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer) : value_(integer) {}
  // Throws kZeroDivisor when `denominator` is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "12", "-3.25", ".5" and "p/q".
  static Rational Parse(std::string_view text);
  static Rational Pow10(int exponent);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  // True when the decimal expansion is finite, i.e. the reduced denominator
  // has no prime factors other than 2 and 5.
  bool is_terminating() const;

  // Minimal exact decimal ("2.5", "-3", "0.05"); nullopt when non-terminating.
  std::optional<std::string> ToDecimal() const;
  // Minimal decimal when terminating, "p/q" otherwise.
  std::string ToString() const;
  // Number of fractional digits of the minimal decimal; requires terminating.
  int DecimalScale() const;
  // Count of digit characters in ToDecimal(), sign and point excluded.
  int DecimalDigitCount() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws kZeroDivisor.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational value)
      : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

// Value of a nonempty string of decimal digits. Leading zeros are allowed
// and never select another base. Throws kMalformedNumber.
BigInt ParseDecimalDigits(std::string_view digits);

// Strips every factor of 2 and 5 from a positive integer.
BigInt StripTwosAndFives(BigInt value);

}  // namespace numview

#endif  // NUMVIEW_RATIONAL_H_

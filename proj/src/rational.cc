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

#include "numview/rational.h"

#include <cctype>
#include <string>
#include <utility>

#include "numview/error.h"

namespace numview {

using boost::multiprecision::cpp_rational;

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kZeroDivisor, "rational with zero denominator");
  }
  value_ = denominator < 0 ? cpp_rational(-numerator, -denominator)
                          : cpp_rational(numerator, denominator);
}

namespace {

bool AllDigits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadRational(std::string_view text) {
  throw Error(ErrorCode::kMalformedNumber,
              "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadRational(original);
    BigInt n = ParseDecimalDigits(num);
    if (negative) n = -n;
    return Rational(n, ParseDecimalDigits(den));
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (!AllDigits(frac_part)) BadRational(original);
    if (!int_part.empty() && !AllDigits(int_part)) BadRational(original);
  } else if (!AllDigits(int_part)) {
    BadRational(original);
  }
  std::string digits(int_part);
  digits += frac_part;
  BigInt n = digits.empty() ? BigInt(0) : ParseDecimalDigits(digits);
  if (negative) n = -n;
  BigInt d = 1;
  for (size_t i = 0; i < frac_part.size(); ++i) d *= 10;
  return Rational(n, d);
}

Rational Rational::Pow10(int exponent) {
  BigInt p = 1;
  const int n = exponent < 0 ? -exponent : exponent;
  for (int i = 0; i < n; ++i) p *= 10;
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

BigInt Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

int Rational::sign() const { return value_.sign(); }

bool Rational::is_integer() const { return denominator() == 1; }

BigInt ParseDecimalDigits(std::string_view digits) {
  if (!AllDigits(digits)) BadRational(digits);
  const size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt{std::string(digits.substr(first))};
}

BigInt StripTwosAndFives(BigInt value) {
  if (value == 0) return value;
  while (value % 2 == 0) value /= 2;
  while (value % 5 == 0) value /= 5;
  return value;
}

bool Rational::is_terminating() const {
  return StripTwosAndFives(denominator()) == 1;
}

int Rational::DecimalScale() const {
  BigInt d = denominator();
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    throw Error(ErrorCode::kOutOfRange,
                "non-terminating decimal " + ToString());
  }
  return twos > fives ? twos : fives;
}

std::optional<std::string> Rational::ToDecimal() const {
  if (!is_terminating()) return std::nullopt;
  const int scale = DecimalScale();
  BigInt scaled = numerator() * Pow10(scale).numerator() / denominator();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= scale) {
    digits.insert(0, static_cast<size_t>(scale) + 1 - digits.size(), '0');
  }
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - scale);
  if (scale > 0) {
    out += '.';
    out += digits.substr(digits.size() - scale);
  }
  return out;
}

std::string Rational::ToString() const {
  if (auto decimal = ToDecimal()) return *decimal;
  return numerator().str() + "/" + denominator().str();
}

int Rational::DecimalDigitCount() const {
  const auto decimal = ToDecimal();
  if (!decimal) {
    throw Error(ErrorCode::kOutOfRange,
                "non-terminating decimal " + ToString());
  }
  int count = 0;
  for (char c : *decimal) count += std::isdigit(static_cast<unsigned char>(c)) ? 1 : 0;
  return count;
}

Rational Rational::operator-() const { return Rational(cpp_rational(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw Error(ErrorCode::kZeroDivisor, "division by zero");
  }
  value_ /= other.value_;
  return *this;
}

}  // namespace numview

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

#ifndef NUMVIEW_NUMBER_FORMS_H_
#define NUMVIEW_NUMBER_FORMS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "numview/rational.h"
#include "numview/rng.h"

namespace numview {

enum class NumberStyle {
  kPlain,
  kWords,
  kCommaGrouped,
  kSpaceGrouped,
  kNoLeadingZero,
  kTrailingZeroDecimal,
};

std::string_view StyleName(NumberStyle style);
// Throws kSchema for an unknown name.
NumberStyle StyleFromName(std::string_view name);

// Largest integer with a word rendering (12-digit cap).
inline constexpr std::uint64_t kMaxWordsValue = 999'999'999'999ULL;

// A number as it is written: sign, digit string, scale (digits after the
// point) and a lexical style. The digit string never carries separators and
// is normalized to exactly the digits a plain rendering shows, so "0.18" is
// digits "018" with scale 2.
class NumberLiteral {
 public:
  NumberLiteral() : NumberLiteral(1, "0", 0) {}
  // Throws kMalformedNumber on a bad digit string or negative scale, and
  // kOutOfRange when `style` is not valid for the number.
  NumberLiteral(int sign, std::string digits, int scale,
                NumberStyle style = NumberStyle::kPlain);

  // Minimal-scale literal of a terminating value; throws kOutOfRange
  // otherwise.
  static NumberLiteral FromRational(const Rational& value,
                                    NumberStyle style = NumberStyle::kPlain);
  // Literal for `scaled` / 10^scale, keeping the given scale.
  static NumberLiteral FromScaled(std::int64_t scaled, int scale);

  int sign() const { return sign_; }
  const std::string& digits() const { return digits_; }
  int scale() const { return scale_; }
  NumberStyle style() const { return style_; }
  Rational value() const;

  // Digit string with leading and trailing zeros removed ("0" for zero).
  std::string SignificantDigits() const;
  std::string IntegerPart() const;
  std::string FractionPart() const;

  bool CanUseStyle(NumberStyle style) const;
  // Throws kOutOfRange when the style is not valid for this number.
  NumberLiteral WithStyle(NumberStyle style) const;

  friend bool operator==(const NumberLiteral&, const NumberLiteral&) = default;

 private:
  int sign_ = 1;
  std::string digits_;
  int scale_ = 0;
  NumberStyle style_ = NumberStyle::kPlain;
};

// Surface string in the literal's style.
std::string Render(const NumberLiteral& literal);

// Parses a digit-form numeral: optional sign, optional grouping with a
// single separator convention (comma or space, groups of three), optional
// decimal point. A leading point (".32") is accepted. Style is inferred.
NumberLiteral ParseNumber(std::string_view text);

// Multiplies by 10^k, keeping the digit sequence and padding with zeros.
NumberLiteral ShiftMagnitude(const NumberLiteral& literal, int k);

// Lowercase English cardinal, e.g. "one thousand two hundred thirty-four".
std::string ToWords(std::uint64_t n);
// Inverse of ToWords; nullopt if the text is not a cardinal it would emit.
std::optional<std::uint64_t> ParseWords(std::string_view text);

enum class NumberKind {
  kInt0To1000,
  kInt1000To1000000,
  kDec1dp0To1000,
  kDec2dp0To1000,
  kInt2Digit,
  kInt3Digit,
  kInt4Digit,
  kIntLarge,
  kIntSmall,
};

// Range and scale of one number type. Values are drawn as an integer m in
// [min_scaled, max_scaled] and read as m / 10^scale.
class NumberTypeSpec {
 public:
  explicit NumberTypeSpec(NumberKind kind);
  // Throws kSchema for an unknown name.
  static NumberTypeSpec FromName(std::string_view name);

  NumberKind kind() const { return kind_; }
  std::string_view name() const;
  int scale() const { return scale_; }
  std::int64_t min_scaled() const { return min_scaled_; }
  std::int64_t max_scaled() const { return max_scaled_; }

  // True when the literal's value and scale fall within this type.
  bool Contains(const NumberLiteral& literal) const;

  friend bool operator==(const NumberTypeSpec& a, const NumberTypeSpec& b) {
    return a.kind_ == b.kind_;
  }

 private:
  NumberKind kind_;
  int scale_ = 0;
  std::int64_t min_scaled_ = 0;
  std::int64_t max_scaled_ = 0;
};

std::span<const NumberKind> AllNumberKinds();

NumberLiteral GenNumber(const NumberTypeSpec& spec, Rng& rng);

}  // namespace numview

#endif  // NUMVIEW_NUMBER_FORMS_H_

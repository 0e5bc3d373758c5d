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

#include "numview/number_forms.h"

#include <array>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "numview/error.h"

namespace numview {

namespace {

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool AllDigits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!IsDigit(c)) return false;
  }
  return true;
}

[[noreturn]] void Malformed(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kMalformedNumber, "malformed numeral '" +
                                               std::string(text) +
                                               "': " + std::string(why));
}

std::string Group(const std::string& integer_part, char separator) {
  std::string out;
  const size_t n = integer_part.size();
  for (size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out += separator;
    out += integer_part[i];
  }
  return out;
}

constexpr std::array<std::string_view, 20> kUnits = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
constexpr std::array<std::string_view, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
    "eighty", "ninety"};

// Words for 1..999.
std::string BelowThousand(unsigned n) {
  std::string out;
  if (n >= 100) {
    out += kUnits[n / 100];
    out += " hundred";
    n %= 100;
    if (n == 0) return out;
    out += ' ';
  }
  if (n < 20) {
    out += kUnits[n];
  } else {
    out += kTens[n / 10];
    if (n % 10 != 0) {
      out += '-';
      out += kUnits[n % 10];
    }
  }
  return out;
}

}  // namespace

std::string_view StyleName(NumberStyle style) {
  switch (style) {
    case NumberStyle::kPlain: return "plain";
    case NumberStyle::kWords: return "words";
    case NumberStyle::kCommaGrouped: return "comma_grouped";
    case NumberStyle::kSpaceGrouped: return "space_grouped";
    case NumberStyle::kNoLeadingZero: return "no_leading_zero";
    case NumberStyle::kTrailingZeroDecimal: return "trailing_zero_decimal";
  }
  return "plain";
}

NumberStyle StyleFromName(std::string_view name) {
  for (NumberStyle s :
       {NumberStyle::kPlain, NumberStyle::kWords, NumberStyle::kCommaGrouped,
        NumberStyle::kSpaceGrouped, NumberStyle::kNoLeadingZero,
        NumberStyle::kTrailingZeroDecimal}) {
    if (StyleName(s) == name) return s;
  }
  throw Error(ErrorCode::kSchema, "unknown number style '" + std::string(name) + "'");
}

NumberLiteral::NumberLiteral(int sign, std::string digits, int scale,
                             NumberStyle style)
    : sign_(sign < 0 ? -1 : 1), digits_(std::move(digits)), scale_(scale) {
  if (!AllDigits(digits_)) Malformed(digits_, "digit string expected");
  if (scale_ < 0) Malformed(digits_, "negative scale");
  const size_t min_size = static_cast<size_t>(scale_) + 1;
  if (digits_.size() < min_size) {
    digits_.insert(0, min_size - digits_.size(), '0');
  }
  size_t strip = 0;
  while (digits_.size() - strip > min_size && digits_[strip] == '0') ++strip;
  digits_.erase(0, strip);
  if (digits_.find_first_not_of('0') == std::string::npos) sign_ = 1;
  if (!CanUseStyle(style)) {
    throw Error(ErrorCode::kOutOfRange,
                "style " + std::string(StyleName(style)) +
                    " is not valid for " + Render(*this));
  }
  style_ = style;
}

NumberLiteral NumberLiteral::FromRational(const Rational& value,
                                          NumberStyle style) {
  const auto decimal = value.ToDecimal();
  if (!decimal) {
    throw Error(ErrorCode::kOutOfRange,
                "no decimal literal for " + value.ToString());
  }
  NumberLiteral lit = ParseNumber(*decimal);
  return NumberLiteral(lit.sign(), lit.digits(), lit.scale(), style);
}

NumberLiteral NumberLiteral::FromScaled(std::int64_t scaled, int scale) {
  const int sign = scaled < 0 ? -1 : 1;
  const std::uint64_t magnitude =
      scaled < 0 ? 0 - static_cast<std::uint64_t>(scaled)
                 : static_cast<std::uint64_t>(scaled);
  return NumberLiteral(sign, std::to_string(magnitude), scale);
}

Rational NumberLiteral::value() const {
  BigInt n = ParseDecimalDigits(digits_);
  if (sign_ < 0) n = -n;
  return Rational(n) * Rational::Pow10(-scale_);
}

std::string NumberLiteral::IntegerPart() const {
  return digits_.substr(0, digits_.size() - scale_);
}

std::string NumberLiteral::FractionPart() const {
  return digits_.substr(digits_.size() - scale_);
}

std::string NumberLiteral::SignificantDigits() const {
  const size_t first = digits_.find_first_not_of('0');
  if (first == std::string::npos) return "0";
  const size_t last = digits_.find_last_not_of('0');
  return digits_.substr(first, last - first + 1);
}

bool NumberLiteral::CanUseStyle(NumberStyle style) const {
  switch (style) {
    case NumberStyle::kPlain:
    case NumberStyle::kCommaGrouped:
    case NumberStyle::kSpaceGrouped:
      return true;
    case NumberStyle::kWords:
      return scale_ == 0 && sign_ > 0 && digits_.size() <= 12;
    case NumberStyle::kNoLeadingZero:
      return scale_ > 0 && IntegerPart() == "0";
    case NumberStyle::kTrailingZeroDecimal:
      return scale_ > 0 && digits_.back() == '0';
  }
  return false;
}

NumberLiteral NumberLiteral::WithStyle(NumberStyle style) const {
  return NumberLiteral(sign_, digits_, scale_, style);
}

std::string Render(const NumberLiteral& literal) {
  std::string out = literal.sign() < 0 ? "-" : "";
  const std::string integer = literal.IntegerPart();
  switch (literal.style()) {
    case NumberStyle::kWords:
      return ToWords(std::stoull(literal.digits()));
    case NumberStyle::kNoLeadingZero:
      break;
    case NumberStyle::kCommaGrouped:
      out += Group(integer, ',');
      break;
    case NumberStyle::kSpaceGrouped:
      out += Group(integer, ' ');
      break;
    case NumberStyle::kPlain:
    case NumberStyle::kTrailingZeroDecimal:
      out += integer;
      break;
  }
  if (literal.scale() > 0) {
    out += '.';
    out += literal.FractionPart();
  }
  return out;
}

NumberLiteral ParseNumber(std::string_view text) {
  const std::string_view original = text;
  if (text.empty()) Malformed(original, "empty");
  int sign = 1;
  if (text.front() == '-' || text.front() == '+') {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  size_t pos = 0;
  auto run = [&]() {
    const size_t start = pos;
    while (pos < text.size() && IsDigit(text[pos])) ++pos;
    return text.substr(start, pos - start);
  };

  std::string integer;
  char separator = 0;
  bool leading_point = false;
  if (pos < text.size() && text[pos] == '.') {
    leading_point = true;
  } else {
    const std::string_view head = run();
    if (head.empty()) Malformed(original, "expected digits");
    integer = head;
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) {
      const char sep = text[pos];
      if (separator != 0 && sep != separator) {
        Malformed(original, "mixed separators");
      }
      if (separator == 0 && head.size() > 3) {
        Malformed(original, "first digit group longer than three");
      }
      separator = sep;
      ++pos;
      const std::string_view group = run();
      if (group.size() != 3) Malformed(original, "digit group of three expected");
      integer += group;
    }
  }
  std::string fraction;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::string_view frac = run();
    if (frac.empty()) Malformed(original, "digits expected after point");
    fraction = frac;
  }
  if (pos != text.size()) Malformed(original, "trailing characters");
  if (leading_point) integer = "0";

  NumberStyle style = NumberStyle::kPlain;
  if (separator == ',') {
    style = NumberStyle::kCommaGrouped;
  } else if (separator == ' ') {
    style = NumberStyle::kSpaceGrouped;
  } else if (leading_point) {
    style = NumberStyle::kNoLeadingZero;
  } else if (!fraction.empty() && fraction.back() == '0') {
    style = NumberStyle::kTrailingZeroDecimal;
  }
  return NumberLiteral(sign, integer + fraction,
                       static_cast<int>(fraction.size()), style);
}

NumberLiteral ShiftMagnitude(const NumberLiteral& literal, int k) {
  std::string digits = literal.digits();
  int scale = literal.scale();
  if (k < 0) {
    scale -= k;
  } else {
    const int absorbed = k < scale ? k : scale;
    scale -= absorbed;
    digits.append(static_cast<size_t>(k - absorbed), '0');
  }
  return NumberLiteral(literal.sign(), std::move(digits), scale);
}

std::string ToWords(std::uint64_t n) {
  if (n > kMaxWordsValue) {
    throw Error(ErrorCode::kOutOfRange,
                "no word rendering above " + std::to_string(kMaxWordsValue));
  }
  if (n == 0) return "zero";
  static constexpr std::array<std::pair<std::uint64_t, std::string_view>, 3>
      kScales = {{{1'000'000'000ULL, "billion"},
                  {1'000'000ULL, "million"},
                  {1'000ULL, "thousand"}}};
  std::string out;
  for (const auto& [unit, word] : kScales) {
    if (n >= unit) {
      if (!out.empty()) out += ' ';
      out += BelowThousand(static_cast<unsigned>(n / unit));
      out += ' ';
      out += word;
      n %= unit;
    }
  }
  if (n > 0) {
    if (!out.empty()) out += ' ';
    out += BelowThousand(static_cast<unsigned>(n));
  }
  return out;
}

std::optional<std::uint64_t> ParseWords(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::string lowered;
    for (char c : text) {
      lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    std::istringstream in(lowered);
    for (std::string word; in >> word;) {
      const size_t dash = word.find('-');
      if (dash != std::string::npos) {
        tokens.push_back(word.substr(0, dash));
        tokens.push_back(word.substr(dash + 1));
      } else {
        tokens.push_back(word);
      }
    }
  }
  if (tokens.empty()) return std::nullopt;
  std::uint64_t total = 0;
  std::uint64_t current = 0;
  for (const std::string& token : tokens) {
    bool matched = false;
    for (unsigned i = 0; i < kUnits.size(); ++i) {
      if (token == kUnits[i]) {
        current += i;
        matched = true;
      }
    }
    for (unsigned i = 2; i < kTens.size() && !matched; ++i) {
      if (token == kTens[i]) {
        current += 10ULL * i;
        matched = true;
      }
    }
    if (matched) continue;
    if (token == "hundred") {
      current *= 100;
    } else if (token == "thousand" || token == "million" || token == "billion") {
      const std::uint64_t unit = token == "thousand"  ? 1'000ULL
                                 : token == "million" ? 1'000'000ULL
                                                      : 1'000'000'000ULL;
      total += current * unit;
      current = 0;
    } else {
      return std::nullopt;
    }
    if (total + current > kMaxWordsValue) return std::nullopt;
  }
  total += current;
  // Accept only the canonical spelling ToWords produces.
  std::string canonical;
  for (size_t i = 0; i < text.size(); ++i) {
    canonical += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
  }
  std::istringstream in(canonical);
  std::string joined;
  for (std::string word; in >> word;) {
    if (!joined.empty()) joined += ' ';
    joined += word;
  }
  if (ToWords(total) != joined) return std::nullopt;
  return total;
}

NumberTypeSpec::NumberTypeSpec(NumberKind kind) : kind_(kind) {
  switch (kind) {
    case NumberKind::kInt0To1000:
    case NumberKind::kIntSmall:
      min_scaled_ = 0;
      max_scaled_ = 999;
      break;
    case NumberKind::kInt1000To1000000:
    case NumberKind::kIntLarge:
      min_scaled_ = 1001;
      max_scaled_ = 1'000'000;
      break;
    case NumberKind::kDec1dp0To1000:
      scale_ = 1;
      min_scaled_ = 1;
      max_scaled_ = 9'999;
      break;
    case NumberKind::kDec2dp0To1000:
      scale_ = 2;
      min_scaled_ = 1;
      max_scaled_ = 99'999;
      break;
    case NumberKind::kInt2Digit:
      min_scaled_ = 10;
      max_scaled_ = 99;
      break;
    case NumberKind::kInt3Digit:
      min_scaled_ = 100;
      max_scaled_ = 999;
      break;
    case NumberKind::kInt4Digit:
      min_scaled_ = 1'000;
      max_scaled_ = 9'999;
      break;
  }
}

std::span<const NumberKind> AllNumberKinds() {
  static constexpr std::array<NumberKind, 9> kKinds = {
      NumberKind::kInt0To1000,   NumberKind::kInt1000To1000000,
      NumberKind::kDec1dp0To1000, NumberKind::kDec2dp0To1000,
      NumberKind::kInt2Digit,    NumberKind::kInt3Digit,
      NumberKind::kInt4Digit,    NumberKind::kIntLarge,
      NumberKind::kIntSmall};
  return kKinds;
}

std::string_view NumberTypeSpec::name() const {
  switch (kind_) {
    case NumberKind::kInt0To1000: return "int_0_1000";
    case NumberKind::kInt1000To1000000: return "int_1000_1000000";
    case NumberKind::kDec1dp0To1000: return "dec_1dp_0_1000";
    case NumberKind::kDec2dp0To1000: return "dec_2dp_0_1000";
    case NumberKind::kInt2Digit: return "int_2digit";
    case NumberKind::kInt3Digit: return "int_3digit";
    case NumberKind::kInt4Digit: return "int_4digit";
    case NumberKind::kIntLarge: return "int_large";
    case NumberKind::kIntSmall: return "int_small";
  }
  return "";
}

NumberTypeSpec NumberTypeSpec::FromName(std::string_view name) {
  for (NumberKind kind : AllNumberKinds()) {
    NumberTypeSpec spec(kind);
    if (spec.name() == name) return spec;
  }
  throw Error(ErrorCode::kSchema, "unknown number type '" + std::string(name) + "'");
}

bool NumberTypeSpec::Contains(const NumberLiteral& literal) const {
  if (literal.scale() != scale_) return false;
  const Rational scaled = literal.value() * Rational::Pow10(scale_);
  return scaled >= Rational(min_scaled_) && scaled <= Rational(max_scaled_);
}

NumberLiteral GenNumber(const NumberTypeSpec& spec, Rng& rng) {
  return NumberLiteral::FromScaled(
      rng.UniformInt(spec.min_scaled(), spec.max_scaled()), spec.scale());
}

}  // namespace numview

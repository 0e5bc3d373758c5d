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

#include "numview/sampling.h"

#include <algorithm>

#include <boost/integer/mod_inverse.hpp>

#include "numview/error.h"

namespace numview {
namespace {

// Value of `expr`, appending the value of every operator node to
// `intermediates` in post-order.
Rational EvaluateTracking(const Expression& expr,
                          std::span<const NumberLiteral> values,
                          std::vector<Rational>& intermediates) {
  if (!expr.is_binary()) return Evaluate(expr, values);
  const BinaryNode& node = expr.binary();
  const Rational lhs = EvaluateTracking(node.lhs, values, intermediates);
  const Rational rhs = EvaluateTracking(node.rhs, values, intermediates);
  Rational result;
  switch (node.op) {
    case BinaryOp::kAdd: result = lhs + rhs; break;
    case BinaryOp::kSub: result = lhs - rhs; break;
    case BinaryOp::kMul: result = lhs * rhs; break;
    case BinaryOp::kDiv: result = lhs / rhs; break;
  }
  intermediates.push_back(result);
  return result;
}

// Slots along paths on which the subtree value is affine in the slot.
void AffineSlots(const Expression& expr, std::vector<int>& out) {
  if (expr.is_slot()) {
    out.push_back(expr.slot());
    return;
  }
  if (!expr.is_binary()) return;
  const BinaryNode& node = expr.binary();
  AffineSlots(node.lhs, out);
  if (node.op != BinaryOp::kDiv) AffineSlots(node.rhs, out);
}

BigInt Mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

class Sampler {
 public:
  Sampler(const Expression& expr, const NumberTypeSpec& spec, Rng& rng)
      : expr_(expr), spec_(spec), rng_(rng) {
    const std::vector<int> slots = expr.Slots();
    slot_count_ = slots.empty() ? 0 : *std::max_element(slots.begin(), slots.end());
    occurrences_.assign(slot_count_ + 1, 0);
    for (int s : slots) ++occurrences_[s];
  }

  // One draw with repairs applied; nullopt when a repair is impossible.
  std::optional<std::vector<NumberLiteral>> Draw(bool order_subtractions) {
    values_.clear();
    for (int i = 0; i < slot_count_; ++i) values_.push_back(GenNumber(spec_, rng_));
    locked_.assign(slot_count_ + 1, false);
    if (!RepairDivisions(expr_)) return std::nullopt;
    if (order_subtractions) OrderSubtractions(expr_);
    return values_;
  }

 private:
  bool RepairDivisions(const Expression& expr) {
    if (!expr.is_binary()) return true;
    const BinaryNode& node = expr.binary();
    if (!RepairDivisions(node.lhs) || !RepairDivisions(node.rhs)) return false;
    if (node.op == BinaryOp::kDiv && !RepairDivision(node)) return false;
    if (node.op == BinaryOp::kDiv) {
      for (int s : expr.Slots()) locked_[s] = true;
    }
    return true;
  }

  bool RepairDivision(const BinaryNode& node) {
    std::vector<int> candidates;
    AffineSlots(node.lhs, candidates);
    std::erase_if(candidates,
                  [&](int s) { return occurrences_[s] != 1 || locked_[s]; });
    if (candidates.empty()) return true;
    const int x = candidates[static_cast<size_t>(
        rng_.UniformInt(0, static_cast<std::int64_t>(candidates.size()) - 1))];

    Rational divisor, d0, d1;
    try {
      divisor = Evaluate(node.rhs, values_);
      if (divisor.is_zero()) return false;
      values_[x - 1] = NumberLiteral::FromScaled(0, 0);
      d0 = Evaluate(node.lhs, values_);
      values_[x - 1] = NumberLiteral::FromScaled(1, 0);
      d1 = Evaluate(node.lhs, values_) - d0;
    } catch (const Error&) {
      return false;
    }
    // Quotient for x = m / 10^scale is p + q * m.
    const Rational p = d0 / divisor;
    const Rational q = d1 / (divisor * Rational::Pow10(spec_.scale()));
    const BigInt t = Lcm(p.denominator(), q.denominator());
    const BigInt a0 = (p * Rational(t)).numerator();
    const BigInt c0 = (q * Rational(t)).numerator();
    const BigInt g = StripTwosAndFives(t);

    const BigInt lo(spec_.min_scaled());
    const BigInt hi(spec_.max_scaled());
    BigInt m;
    if (g == 1 || c0 == 0) {
      m = lo + BigInt(rng_.UniformInt(0, spec_.max_scaled() - spec_.min_scaled()));
    } else {
      // Solve c0 * m == -a0 (mod g).
      const BigInt c = Mod(c0, g);
      const BigInt target = Mod(-a0, g);
      const BigInt h = boost::multiprecision::gcd(c, g);
      if (target % h != 0) return false;
      const BigInt step = g / h;
      BigInt m0 = 0;
      if (step > 1) {
        const BigInt inv = boost::integer::mod_inverse(BigInt(c / h), step);
        m0 = Mod((target / h) * inv, step);
      }
      const BigInt first = lo + Mod(m0 - lo, step);
      if (first > hi) return false;
      const BigInt count = (hi - first) / step + 1;
      const std::int64_t k =
          rng_.UniformInt(0, static_cast<std::int64_t>(count) - 1);
      m = first + BigInt(k) * step;
    }
    values_[x - 1] = NumberLiteral::FromScaled(static_cast<std::int64_t>(m),
                                               spec_.scale());
    return true;
  }

  void OrderSubtractions(const Expression& expr) {
    if (!expr.is_binary()) return;
    const BinaryNode& node = expr.binary();
    OrderSubtractions(node.lhs);
    OrderSubtractions(node.rhs);
    if (node.op != BinaryOp::kSub || !node.lhs.is_slot() ||
        !node.rhs.is_slot() || node.lhs.slot() == node.rhs.slot()) {
      return;
    }
    NumberLiteral& a = values_[node.lhs.slot() - 1];
    NumberLiteral& b = values_[node.rhs.slot() - 1];
    if (a.value() < b.value()) std::swap(a, b);
  }

  const Expression& expr_;
  const NumberTypeSpec& spec_;
  Rng& rng_;
  int slot_count_ = 0;
  std::vector<int> occurrences_;
  std::vector<bool> locked_;
  std::vector<NumberLiteral> values_;
};

}  // namespace

std::optional<std::string> CheckConstraint(const Expression& expr,
                                           std::span<const NumberLiteral> values,
                                           const AnswerConstraint& constraint) {
  std::vector<Rational> intermediates;
  Rational answer;
  try {
    answer = EvaluateTracking(expr, values, intermediates);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kZeroDivisor) return "zero divisor";
    throw;
  }
  if (constraint.require_nonnegative_intermediates) {
    for (size_t i = 0; i + 1 < intermediates.size(); ++i) {
      if (intermediates[i].sign() < 0) return "negative intermediate result";
    }
  }
  if (constraint.require_nonnegative_answer && answer.sign() < 0) {
    return "negative answer";
  }
  if (!answer.is_terminating()) {
    if (constraint.require_terminating) return "non-terminating answer";
    return std::nullopt;
  }
  if (answer.DecimalDigitCount() > constraint.max_digits) {
    return "answer exceeds " + std::to_string(constraint.max_digits) + " digits";
  }
  return std::nullopt;
}

SampleResult SampleSlotValues(const Expression& expr, const NumberTypeSpec& spec,
                              const AnswerConstraint& constraint, Rng& rng,
                              const SampleFilter& filter, int budget) {
  SampleResult result;
  Sampler sampler(expr, spec, rng);
  const bool order = constraint.require_nonnegative_answer ||
                     constraint.require_nonnegative_intermediates;
  for (result.attempts = 1; result.attempts <= budget; ++result.attempts) {
    std::optional<std::vector<NumberLiteral>> values = sampler.Draw(order);
    if (!values) {
      result.last_failure = "no terminating dividend in range";
      continue;
    }
    if (auto failure = CheckConstraint(expr, *values, constraint)) {
      result.last_failure = *failure;
      continue;
    }
    if (filter) {
      if (auto failure = filter(*values)) {
        result.last_failure = *failure;
        continue;
      }
    }
    result.values = std::move(values);
    return result;
  }
  result.attempts = budget;
  return result;
}

}  // namespace numview

// Copyright 2026 The spinqft Authors
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

#include "spinqft/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinqft/errors.hpp"

namespace spinqft {

namespace {

BigInt shl(const BigInt& value, std::uint64_t bits) {
  return value << static_cast<unsigned>(bits);
}

}  // namespace

std::uint64_t msb_index(const BigInt& positive) {
  return boost::multiprecision::msb(positive);
}

void Dyadic::canonicalize() {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const std::uint64_t trailing = boost::multiprecision::lsb(boost::multiprecision::abs(mantissa_));
  const std::uint64_t drop = std::min(trailing, exponent_);
  if (drop > 0) {
    mantissa_ >>= static_cast<unsigned>(drop);
    exponent_ -= drop;
  }
}

Dyadic Dyadic::from_parts(BigInt mantissa, std::uint64_t exponent) {
  Dyadic out;
  out.mantissa_ = std::move(mantissa);
  out.exponent_ = exponent;
  out.canonicalize();
  return out;
}

Dyadic Dyadic::pow2(std::int64_t e) {
  if (e >= 0) return Dyadic(shl(BigInt(1), static_cast<std::uint64_t>(e)));
  return from_parts(BigInt(1), static_cast<std::uint64_t>(-e));
}

Dyadic Dyadic::from_double(double value) {
  if (!std::isfinite(value)) {
    throw InvalidArgument("Dyadic::from_double: value is not finite");
  }
  if (value == 0.0) return {};
  int exp2 = 0;
  const double frac = std::frexp(value, &exp2);  // value = frac * 2^exp2
  const auto scaled = static_cast<std::int64_t>(std::ldexp(frac, 53));
  return Dyadic(scaled).scaled(static_cast<std::int64_t>(exp2) - 53);
}

Dyadic Dyadic::abs() const {
  Dyadic out = *this;
  if (out.mantissa_.sign() < 0) out.mantissa_ = -out.mantissa_;
  return out;
}

Dyadic Dyadic::scaled(std::int64_t e) const {
  if (is_zero() || e == 0) return *this;
  if (e < 0) {
    return from_parts(mantissa_, exponent_ + static_cast<std::uint64_t>(-e));
  }
  const auto up = static_cast<std::uint64_t>(e);
  if (up <= exponent_) return from_parts(mantissa_, exponent_ - up);
  return Dyadic(shl(mantissa_, up - exponent_));
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  BigInt magnitude = boost::multiprecision::abs(mantissa_);
  const std::uint64_t bits = msb_index(magnitude) + 1;
  std::uint64_t shift = 0;
  if (bits > 62) {
    shift = bits - 62;
    magnitude >>= static_cast<unsigned>(shift);
  }
  const double head = magnitude.convert_to<double>();
  const auto net = static_cast<std::int64_t>(shift) - static_cast<std::int64_t>(std::min<std::uint64_t>(exponent_, 1u << 20));
  const int clamped = static_cast<int>(std::clamp<std::int64_t>(net, -4000, 4000));
  const double out = std::ldexp(head, clamped);
  return mantissa_.sign() < 0 ? -out : out;
}

std::string Dyadic::to_decimal_string() const {
  if (exponent_ == 0) return mantissa_.str();
  const BigInt five_pow = boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(exponent_));
  const BigInt scaled = boost::multiprecision::abs(mantissa_) * five_pow;
  std::string digits = scaled.str();
  if (digits.size() <= exponent_) {
    digits.insert(0, exponent_ + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - exponent_, 1, '.');
  if (mantissa_.sign() < 0) digits.insert(0, 1, '-');
  return digits;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.exponent_ >= b.exponent_) {
    return Dyadic::from_parts(a.mantissa_ + shl(b.mantissa_, a.exponent_ - b.exponent_), a.exponent_);
  }
  return Dyadic::from_parts(shl(a.mantissa_, b.exponent_ - a.exponent_) + b.mantissa_, b.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic::from_parts(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.mantissa_ = -out.mantissa_;
  return out;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const std::uint64_t common = std::max(a.exponent_, b.exponent_);
  const BigInt lhs = shl(a.mantissa_, common - a.exponent_);
  const BigInt rhs = shl(b.mantissa_, common - b.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

DyadicAngle DyadicAngle::canonical(BigInt numerator, std::int64_t log2_denominator) {
  if (log2_denominator < 0) {
    throw InvalidArgument("DyadicAngle: log2 denominator must be non-negative, got " +
                          std::to_string(log2_denominator));
  }
  return DyadicAngle(Dyadic::from_parts(std::move(numerator), static_cast<std::uint64_t>(log2_denominator)));
}

DyadicAngle DyadicAngle::pi_over_pow2(std::uint64_t j) {
  return DyadicAngle(Dyadic::from_parts(BigInt(1), j));
}

DyadicAngle DyadicAngle::from_pi_multiple(Dyadic multiple) { return DyadicAngle(std::move(multiple)); }

DyadicAngle DyadicAngle::reduced() const {
  // In units of pi the period is 2, i.e. 2^(e+1) in mantissa units.
  const std::uint64_t e = log2_denominator();
  const BigInt period = shl(BigInt(1), e + 1);
  const BigInt half = shl(BigInt(1), e);
  BigInt r = numerator() % period;
  if (r.sign() < 0) r += period;
  if (r > half) r -= period;
  return DyadicAngle(Dyadic::from_parts(std::move(r), e));
}

double DyadicAngle::radians() const { return multiple_.to_double() * std::numbers::pi; }

std::string DyadicAngle::to_string() const {
  if (is_zero()) return "0";
  std::string out = numerator().str() + "pi";
  if (log2_denominator() > 0) out += "/2^" + std::to_string(log2_denominator());
  return out;
}

}  // namespace spinqft

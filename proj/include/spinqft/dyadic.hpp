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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace spinqft {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational of the form mantissa / 2^exponent.
 *
 * Every rotation angle in the gate alphabet is a dyadic multiple of pi, so
 * durations measured in units of a dyadic reference rotation are dyadic as
 * well. Sums, differences and products stay dyadic; no division other than by
 * powers of two is offered.
 *
 * Canonical form: the mantissa is odd, or the exponent is zero. Zero is
 * stored as (0, 0). Equality is structural on the canonical form.
 */
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t value) : mantissa_(value) {}  // NOLINT implicit
  Dyadic(BigInt value) : mantissa_(std::move(value)) {}  // NOLINT implicit

  /// mantissa / 2^exponent, canonicalized.
  static Dyadic from_parts(BigInt mantissa, std::uint64_t exponent);

  /// 2^e for any signed e.
  static Dyadic pow2(std::int64_t e);

  /// The exact value of a finite double (every finite double is dyadic).
  /// Throws InvalidArgument for NaN or infinity.
  static Dyadic from_double(double value);

  const BigInt& mantissa() const { return mantissa_; }
  std::uint64_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_.is_zero(); }
  int sign() const { return mantissa_.sign(); }
  bool is_integer() const { return exponent_ == 0; }

  Dyadic abs() const;
  /// value * 2^e.
  Dyadic scaled(std::int64_t e) const;

  /// Nearest-ish double; exact whenever the value is representable.
  double to_double() const;

  /// Exact decimal expansion. Dyadic values always terminate in base 10.
  /// Integers print without a decimal point.
  std::string to_decimal_string() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& other) { return *this = *this + other; }
  Dyadic& operator-=(const Dyadic& other) { return *this = *this - other; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void canonicalize();

  BigInt mantissa_ = 0;
  std::uint64_t exponent_ = 0;
};

/// Index of the most significant set bit of a positive integer.
std::uint64_t msb_index(const BigInt& positive);

/**
 * An angle numerator * pi / 2^log2_denominator, held exactly.
 *
 * Only dyadic multiples of pi are representable; construction canonicalizes
 * (odd numerator, or zero with log2_denominator 0).
 */
class DyadicAngle {
 public:
  DyadicAngle() = default;

  /// Throws InvalidArgument when log2_denominator < 0.
  static DyadicAngle canonical(BigInt numerator, std::int64_t log2_denominator);

  /// pi / 2^j, the QFT rotation for control distance j.
  static DyadicAngle pi_over_pow2(std::uint64_t j);

  /// Angle whose value in units of pi is `multiple`.
  static DyadicAngle from_pi_multiple(Dyadic multiple);

  const BigInt& numerator() const { return multiple_.mantissa(); }
  std::uint64_t log2_denominator() const { return multiple_.exponent(); }

  /// Value divided by pi.
  const Dyadic& pi_multiple() const { return multiple_; }

  bool is_zero() const { return multiple_.is_zero(); }

  DyadicAngle negated() const { return DyadicAngle(-multiple_); }
  DyadicAngle halved() const { return DyadicAngle(multiple_.scaled(-1)); }
  DyadicAngle quartered() const { return DyadicAngle(multiple_.scaled(-2)); }

  /// The representative of this angle modulo 2 pi in (-pi, pi].
  DyadicAngle reduced() const;

  /// Radians. Underflows gracefully to 0 for very large denominators.
  double radians() const;

  std::string to_string() const;

  friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;

 private:
  explicit DyadicAngle(Dyadic multiple) : multiple_(std::move(multiple)) {}

  Dyadic multiple_;
};

}  // namespace spinqft

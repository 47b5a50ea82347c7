/*
   Copyright 2026 The cremona Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace cremona::arith {

inline constexpr long kDefaultPrecisionBits = 256;
inline constexpr long kMinPrecisionBits = 64;

/**
 * Owning wrapper around an MPFR real. Binary operations produce a result at
 * the larger of the operand precisions, rounded to nearest.
 */
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = kDefaultPrecisionBits);
  BigFloat(long value, long precision_bits);
  BigFloat(const mpq_class& value, long precision_bits);
  BigFloat(const mpz_class& value, long precision_bits);
  /// Parses a decimal string; throws InvalidInput on malformed text.
  BigFloat(const std::string& decimal, long precision_bits);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend BigFloat operator+(const BigFloat& a, const mpq_class& b) { return a + BigFloat(b, a.precision()); }
  friend BigFloat operator-(const BigFloat& a, const mpq_class& b) { return a - BigFloat(b, a.precision()); }
  friend BigFloat operator*(const BigFloat& a, const mpq_class& b) { return a * BigFloat(b, a.precision()); }
  friend BigFloat operator*(const mpq_class& b, const BigFloat& a) { return a * BigFloat(b, a.precision()); }
  friend BigFloat operator+(const mpq_class& b, const BigFloat& a) { return a + BigFloat(b, a.precision()); }
  friend BigFloat operator-(const mpq_class& b, const BigFloat& a) { return BigFloat(b, a.precision()) - a; }
  friend BigFloat operator+(const BigFloat& a, const mpz_class& b) { return a + BigFloat(b, a.precision()); }
  friend BigFloat operator*(const BigFloat& a, const mpz_class& b) { return a * BigFloat(b, a.precision()); }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 30) const;

  /// 2^e at the given precision.
  static BigFloat exp2(long e, long precision_bits);

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat pow(const BigFloat& a, long e);

/// Real numbers at a fixed working precision.
class FloatField {
 public:
  using Scalar = BigFloat;

  explicit FloatField(long precision_bits = kDefaultPrecisionBits);

  long precision() const { return precision_; }
  Scalar zero() const { return BigFloat(0L, precision_); }
  Scalar one() const { return BigFloat(1L, precision_); }
  Scalar from_int(long v) const { return BigFloat(v, precision_); }
  Scalar from_integer(const mpz_class& v) const { return BigFloat(v, precision_); }
  Scalar from_rational(const mpq_class& v) const { return BigFloat(v, precision_); }

  /// Absolute magnitude below which a value counts as zero: 2^-(prec-16).
  const BigFloat& zero_threshold() const { return zero_threshold_; }
  /// Relative tolerance for equality: 2^-(prec/2).
  const BigFloat& tolerance() const { return tolerance_; }

  bool is_zero(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;
  /// Partial pivoting by magnitude.
  bool better_pivot(const Scalar& candidate, const Scalar& current) const;
  double magnitude(const Scalar& a) const { return abs(a).to_double(); }

 private:
  long precision_;
  BigFloat zero_threshold_;
  BigFloat tolerance_;
};

}  // namespace cremona::arith

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

#include "cremona/arith/big_float.hpp"

#include <algorithm>
#include <cstdlib>

#include "cremona/errors.hpp"

namespace cremona::arith {

namespace {

mpfr_prec_t checked(long precision_bits) {
  if (precision_bits < kMinPrecisionBits)
    throw InvalidInput("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  return static_cast<mpfr_prec_t>(precision_bits);
}

mpfr_prec_t widest(const BigFloat& a, const BigFloat& b) {
  return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(v_, checked(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long precision_bits) {
  mpfr_init2(v_, checked(precision_bits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, long precision_bits) {
  mpfr_init2(v_, checked(precision_bits));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, long precision_bits) {
  mpfr_init2(v_, checked(precision_bits));
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, long precision_bits) {
  mpfr_init2(v_, checked(precision_bits));
  char* end = nullptr;
  mpfr_strtofr(v_, decimal.c_str(), &end, 10, MPFR_RNDN);
  if (end == decimal.c_str() || *end != '\0') {
    mpfr_clear(v_);
    throw InvalidInput("not a decimal number: '" + decimal + "'");
  }
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // Leave the source valid but minimal; swapping keeps ownership single.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(static_cast<long>(widest(a, b)));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(static_cast<long>(widest(a, b)));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(static_cast<long>(widest(a, b)));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(static_cast<long>(widest(a, b)));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Rg", digits, v_) < 0) throw std::bad_alloc();
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat BigFloat::exp2(long e, long precision_bits) {
  BigFloat r(1L, precision_bits);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) { return a.sign() < 0 ? -a : a; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pow(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_pow_si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

FloatField::FloatField(long precision_bits)
    : precision_(precision_bits),
      zero_threshold_(BigFloat::exp2(-(precision_bits - 16), precision_bits)),
      tolerance_(BigFloat::exp2(-(precision_bits / 2), precision_bits)) {}

bool FloatField::is_zero(const Scalar& a) const { return abs(a) < zero_threshold_; }

bool FloatField::equal(const Scalar& a, const Scalar& b) const {
  const BigFloat scale = max(BigFloat(1L, precision_), max(abs(a), abs(b)));
  return abs(a - b) <= tolerance_ * scale;
}

bool FloatField::better_pivot(const Scalar& candidate, const Scalar& current) const {
  return abs(candidate) > abs(current);
}

}  // namespace cremona::arith

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

#include <memory>
#include <stdexcept>
#include <string>

#include "cremona/arith/polynomial.hpp"

namespace cremona::arith {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in number field") {}
};

/// Inversion met a non-unit: the modulus shares a nontrivial factor with the residue.
class ZeroDivisorError : public std::domain_error {
 public:
  explicit ZeroDivisorError(IntegerPolynomial factor)
      : std::domain_error("modulus is reducible: shares factor " + to_string(factor)),
        factor_(std::move(factor)) {}
  const IntegerPolynomial& factor() const noexcept { return factor_; }

 private:
  IntegerPolynomial factor_;
};

class IncompatibleFields : public std::logic_error {
 public:
  IncompatibleFields() : std::logic_error("operands live in different number fields") {}
};

class NumberFieldElement;

/**
 * Q[x]/(S) for a monic integer polynomial S. Cheap to copy; elements share the
 * modulus through a reference-counted handle.
 */
class NumberField {
 public:
  using Scalar = NumberFieldElement;

  explicit NumberField(IntegerPolynomial modulus);

  const IntegerPolynomial& modulus() const { return data_->modulus; }
  int degree() const { return data_->modulus.degree(); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// Residue class of x.
  Scalar generator() const;
  Scalar element(const RationalPolynomial& p) const;

  bool is_zero(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;
  /// Any nonzero entry is an acceptable pivot over an exact field.
  bool better_pivot(const Scalar& candidate, const Scalar& current) const;
  /// Residual size for reports: 0 for zero, +inf for any nonzero exact value.
  double magnitude(const Scalar& a) const;

  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  friend class NumberFieldElement;
  struct Data {
    IntegerPolynomial modulus;
  };
  explicit NumberField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

class NumberFieldElement {
 public:
  const RationalPolynomial& residue() const { return residue_; }
  NumberField field() const { return NumberField(field_); }
  bool is_zero() const { return residue_.is_zero(); }
  /// Residue is a constant polynomial.
  bool is_rational() const { return residue_.degree() <= 0; }

  NumberFieldElement operator-() const;
  NumberFieldElement& operator+=(const NumberFieldElement& o);
  NumberFieldElement& operator-=(const NumberFieldElement& o);
  NumberFieldElement& operator*=(const NumberFieldElement& o);
  NumberFieldElement& operator/=(const NumberFieldElement& o);
  NumberFieldElement& operator*=(const mpq_class& s);

  friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
  friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
  friend NumberFieldElement operator*(NumberFieldElement a, const NumberFieldElement& b) { return a *= b; }
  friend NumberFieldElement operator/(NumberFieldElement a, const NumberFieldElement& b) { return a /= b; }
  friend NumberFieldElement operator*(NumberFieldElement a, const mpq_class& s) { return a *= s; }
  friend NumberFieldElement operator*(const mpq_class& s, NumberFieldElement a) { return a *= s; }
  friend NumberFieldElement operator+(NumberFieldElement a, const mpq_class& s);
  friend NumberFieldElement operator-(NumberFieldElement a, const mpq_class& s);
  friend NumberFieldElement operator+(const mpq_class& s, NumberFieldElement a) { return std::move(a) + s; }
  friend NumberFieldElement operator-(const mpq_class& s, const NumberFieldElement& a) { return -a + s; }

  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);

  NumberFieldElement pow(long e) const;
  std::string to_string() const { return arith::to_string(residue_, "d"); }

 private:
  friend class NumberField;
  friend NumberFieldElement nf_invert(const NumberFieldElement& a);
  NumberFieldElement(std::shared_ptr<const NumberField::Data> f, RationalPolynomial r)
      : field_(std::move(f)), residue_(std::move(r)) {}
  void check_same(const NumberFieldElement& o) const;

  std::shared_ptr<const NumberField::Data> field_;
  RationalPolynomial residue_;
};

/// Reduces p modulo a monic modulus of degree at least one.
NumberFieldElement nf_reduce(const RationalPolynomial& p, const IntegerPolynomial& modulus);

/// Multiplicative inverse. Throws DivisionByZero or ZeroDivisorError.
NumberFieldElement nf_invert(const NumberFieldElement& a);

}  // namespace cremona::arith

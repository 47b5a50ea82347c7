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

#include "cremona/arith/number_field.hpp"

#include <limits>

#include "cremona/errors.hpp"

namespace cremona::arith {

namespace {

RationalPolynomial reduce_mod(const RationalPolynomial& p, const IntegerPolynomial& m) {
  const int d = m.degree();
  if (p.degree() < d) return p;
  std::vector<mpq_class> c(p.coefficients().begin(), p.coefficients().end());
  for (int i = p.degree(); i >= d; --i) {
    const mpq_class q = c[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    for (int j = 0; j < d; ++j)
      c[static_cast<std::size_t>(i - d + j)] -= q * m.coefficient(static_cast<std::size_t>(j));
  }
  c.resize(static_cast<std::size_t>(d));
  return RationalPolynomial(std::move(c));
}

}  // namespace

NumberField::NumberField(IntegerPolynomial modulus) {
  if (modulus.degree() < 1) throw InvalidInput("number field modulus must have degree at least 1");
  if (modulus.leading() != 1) throw InvalidInput("number field modulus must be monic");
  data_ = std::make_shared<const Data>(Data{std::move(modulus)});
}

NumberFieldElement NumberField::zero() const { return {data_, {}}; }
NumberFieldElement NumberField::one() const { return from_int(1); }
NumberFieldElement NumberField::from_int(long v) const { return from_rational(mpq_class(v)); }
NumberFieldElement NumberField::from_integer(const mpz_class& v) const { return from_rational(mpq_class(v)); }
NumberFieldElement NumberField::from_rational(const mpq_class& v) const {
  mpq_class c = v;
  c.canonicalize();
  return {data_, RationalPolynomial::constant(c)};
}

NumberFieldElement NumberField::generator() const {
  return element(RationalPolynomial::monomial(mpq_class(1), 1));
}

NumberFieldElement NumberField::element(const RationalPolynomial& p) const {
  return {data_, reduce_mod(p, data_->modulus)};
}

bool NumberField::is_zero(const Scalar& a) const { return a.is_zero(); }
bool NumberField::equal(const Scalar& a, const Scalar& b) const { return a == b; }
bool NumberField::better_pivot(const Scalar& candidate, const Scalar& current) const {
  return current.is_zero() && !candidate.is_zero();
}

double NumberField::magnitude(const Scalar& a) const {
  return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
}

bool operator==(const NumberField& a, const NumberField& b) {
  return a.data_ == b.data_ || a.data_->modulus == b.data_->modulus;
}

void NumberFieldElement::check_same(const NumberFieldElement& o) const {
  if (field_ != o.field_ && !(field_->modulus == o.field_->modulus)) throw IncompatibleFields();
}

NumberFieldElement NumberFieldElement::operator-() const { return {field_, -residue_}; }

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& o) {
  check_same(o);
  residue_ += o.residue_;
  return *this;
}

NumberFieldElement& NumberFieldElement::operator-=(const NumberFieldElement& o) {
  check_same(o);
  residue_ -= o.residue_;
  return *this;
}

NumberFieldElement& NumberFieldElement::operator*=(const NumberFieldElement& o) {
  check_same(o);
  residue_ = reduce_mod(residue_ * o.residue_, field_->modulus);
  return *this;
}

NumberFieldElement& NumberFieldElement::operator/=(const NumberFieldElement& o) {
  return *this *= nf_invert(o);
}

NumberFieldElement& NumberFieldElement::operator*=(const mpq_class& s) {
  residue_ *= s;
  return *this;
}

NumberFieldElement operator+(NumberFieldElement a, const mpq_class& s) {
  a.residue_ += RationalPolynomial::constant(s);
  return a;
}

NumberFieldElement operator-(NumberFieldElement a, const mpq_class& s) {
  a.residue_ -= RationalPolynomial::constant(s);
  return a;
}

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
  a.check_same(b);
  return a.residue_ == b.residue_;
}

NumberFieldElement NumberFieldElement::pow(long e) const {
  if (e < 0) return nf_invert(*this).pow(-e);
  NumberFieldElement result{field_, RationalPolynomial::constant(mpq_class(1))};
  NumberFieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

NumberFieldElement nf_reduce(const RationalPolynomial& p, const IntegerPolynomial& modulus) {
  return NumberField(modulus).element(p);
}

NumberFieldElement nf_invert(const NumberFieldElement& a) {
  if (a.is_zero()) throw DivisionByZero();
  // Extended Euclid tracking only the cofactor of a.
  RationalPolynomial r0 = to_rational(a.field_->modulus), r1 = a.residue_;
  RationalPolynomial s0, s1 = RationalPolynomial::constant(mpq_class(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RationalPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() > 0) throw ZeroDivisorError(primitive_part(r0));
  const mpq_class scale = 1 / r0.leading();
  return {a.field_, reduce_mod(s0 * scale, a.field_->modulus)};
}

}  // namespace cremona::arith

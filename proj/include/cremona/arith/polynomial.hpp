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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona::arith {

/**
 * Dense univariate polynomial, coefficient i multiplies x^i.
 *
 * The coefficient vector is kept trimmed: the highest stored coefficient is
 * nonzero, and the zero polynomial stores nothing.
 */
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }

  static Polynomial monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  /// x^d - 1
  static Polynomial x_pow_minus_one(std::size_t d) {
    Polynomial p = monomial(Coeff(1), d);
    p.c_[0] -= 1;
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  Coeff coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }
  std::span<const Coeff> coefficients() const { return c_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Coeff& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Horner evaluation at any type that can absorb the coefficients.
  template <class T>
  T evaluate(const T& x, const T& zero) const {
    T acc = zero;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntegerPolynomial = Polynomial<mpz_class>;
using RationalPolynomial = Polynomial<mpq_class>;

RationalPolynomial to_rational(const IntegerPolynomial& p);

/// Clears denominators and content; the result has positive leading coefficient.
IntegerPolynomial primitive_part(const RationalPolynomial& p);

/// Monic associate over Q. The zero polynomial maps to itself.
RationalPolynomial make_monic(const RationalPolynomial& p);

/// Euclidean division over Q. Throws InvalidInput for a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

/// Quotient of a by b when b divides a exactly over Z, otherwise nullopt.
std::optional<IntegerPolynomial> exact_quotient(const IntegerPolynomial& a,
                                                const IntegerPolynomial& b);

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p) {
  if (p.degree() < 1) return {};
  std::vector<Coeff> r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p.coefficient(i) * static_cast<long>(i);
  return Polynomial<Coeff>(std::move(r));
}

/// Monic gcd over Q (zero when both inputs are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Coefficients read the same in both directions.
bool is_reciprocal(const IntegerPolynomial& p);

/// Sign of p at a rational point: -1, 0 or 1.
int sign_at(const RationalPolynomial& p, const mpq_class& x);

std::string to_string(const IntegerPolynomial& p, const std::string& var = "x");
std::string to_string(const RationalPolynomial& p, const std::string& var = "x");

}  // namespace cremona::arith

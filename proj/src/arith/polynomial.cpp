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

#include "cremona/arith/polynomial.hpp"

#include <sstream>

#include "cremona/errors.hpp"

namespace cremona::arith {

RationalPolynomial to_rational(const IntegerPolynomial& p) {
  std::vector<mpq_class> c;
  c.reserve(p.size());
  for (const auto& z : p.coefficients()) c.emplace_back(z);
  return RationalPolynomial(std::move(c));
}

IntegerPolynomial primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  mpz_class den = 1;
  for (const auto& q : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> c;
  c.reserve(p.size());
  mpz_class content = 0;
  for (const auto& q : p.coefficients()) {
    mpz_class z = q.get_num() * (den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    c.push_back(std::move(z));
  }
  if (p.leading() < 0) content = -content;
  for (auto& z : c) z /= content;
  return IntegerPolynomial(std::move(c));
}

RationalPolynomial make_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  mpq_class inv = 1 / p.leading();
  return p * inv;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<mpq_class> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const mpq_class lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const mpq_class q = rem[static_cast<std::size_t>(i)] * lead_inv;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

std::optional<IntegerPolynomial> exact_quotient(const IntegerPolynomial& a,
                                                const IntegerPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.is_zero()) return IntegerPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<mpz_class> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const mpz_class& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const mpz_class& r = rem[static_cast<std::size_t>(i)];
    if (r == 0) continue;
    if (!mpz_divisible_p(r.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    const mpz_class q = r / lead;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
  }
  for (int i = 0; i < db; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntegerPolynomial(std::move(quo));
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

bool is_reciprocal(const IntegerPolynomial& p) {
  const auto c = p.coefficients();
  for (std::size_t i = 0, j = c.size(); i < j--; ++i)
    if (c[i] != c[j]) return false;
  return true;
}

int sign_at(const RationalPolynomial& p, const mpq_class& x) {
  return sgn(p.evaluate(x, mpq_class(0)));
}

namespace {

template <class Coeff>
std::string format(const Polynomial<Coeff>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    Coeff c = p.coefficient(i);
    if (c == 0) continue;
    if (c < 0) {
      out << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      out << " + ";
    }
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i > 0) {
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntegerPolynomial& p, const std::string& var) { return format(p, var); }
std::string to_string(const RationalPolynomial& p, const std::string& var) { return format(p, var); }

}  // namespace cremona::arith

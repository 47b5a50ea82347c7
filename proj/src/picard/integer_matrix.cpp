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

#include "cremona/picard/integer_matrix.hpp"

#include "cremona/arith/rational_field.hpp"

namespace cremona::picard {

using arith::IntegerPolynomial;

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows(), mpz_class(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

mpz_class pairing(const IntMatrix& gram, const IntVector& a, const IntVector& b) {
  const IntVector gb = gram * b;
  mpz_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * gb[i];
  return acc;
}

IntegerPolynomial characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("characteristic polynomial needs a square matrix");
  if (n == 0) return IntegerPolynomial{1};
  std::vector<std::vector<IntegerPolynomial>> a(n, std::vector<IntegerPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = IntegerPolynomial::constant(-m(i, j));
      if (i == j) a[i][j] += IntegerPolynomial::monomial(mpz_class(1), 1);
    }
  IntegerPolynomial previous{1};
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (a[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < n && a[r][c].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[c], a[r]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        const IntegerPolynomial num = a[i][j] * a[c][c] - a[i][c] * a[c][j];
        auto q = arith::exact_quotient(num, previous);
        if (!q) throw std::logic_error("Bareiss step was not exact");
        a[i][j] = std::move(*q);
      }
      a[i][c] = IntegerPolynomial{};
    }
    previous = a[c][c];
  }
  return a[n - 1][n - 1] * mpz_class(sign);
}

IntMatrix integer_inverse(const IntMatrix& m) {
  const arith::RationalField q;
  geometry::Matrix<mpq_class> rational = m.map([](const mpz_class& z) { return mpq_class(z); });
  const auto inv = geometry::inverse(q, std::move(rational));
  IntMatrix out(m.rows(), m.cols(), mpz_class(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (inv(i, j).get_den() != 1) throw InvalidInput("matrix is not unimodular");
      out(i, j) = inv(i, j).get_num();
    }
  return out;
}

}  // namespace cremona::picard

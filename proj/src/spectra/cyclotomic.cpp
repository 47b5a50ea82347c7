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

#include "cremona/spectra/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "cremona/errors.hpp"

namespace cremona::spectra {

long euler_phi(long d) {
  if (d < 1) throw InvalidInput("totient needs a positive argument");
  long result = d;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

const IntegerPolynomial& cyclotomic(long d) {
  if (d < 1) throw InvalidInput("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<long, IntegerPolynomial> cache;  // node-based: references stay valid
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  // Φ_d = (x^d - 1) / Π_{e | d, e < d} Φ_e
  IntegerPolynomial poly = IntegerPolynomial::x_pow_minus_one(static_cast<std::size_t>(d));
  for (long e = 1; e < d; ++e) {
    if (d % e) continue;
    poly = *arith::exact_quotient(poly, cyclotomic(e));
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(d, std::move(poly)).first->second;
}

IntegerPolynomial CyclotomicSplit::reconstruct() const {
  IntegerPolynomial p = core * mpz_class(sign);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) p *= cyclotomic(f.index);
  return p;
}

CyclotomicSplit strip_cyclotomic(const IntegerPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("cannot strip the zero polynomial");
  CyclotomicSplit split;
  IntegerPolynomial rest = p;
  // φ(d) ≥ sqrt(d/2), so φ(d) ≤ deg forces d ≤ 2 deg².
  const long deg = p.degree();
  for (long d = 1; d <= 2 * deg * deg && rest.degree() > 0; ++d) {
    if (euler_phi(d) > rest.degree()) continue;
    int mult = 0;
    while (rest.degree() >= cyclotomic(d).degree()) {
      auto q = arith::exact_quotient(rest, cyclotomic(d));
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) split.factors.push_back({d, mult});
  }
  if (rest.leading() < 0) {
    split.sign = -1;
    rest = -rest;
  }
  split.core = std::move(rest);
  return split;
}

}  // namespace cremona::spectra

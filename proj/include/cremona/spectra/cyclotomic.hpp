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

#include <utility>
#include <vector>

#include "cremona/arith/polynomial.hpp"

namespace cremona::spectra {

using arith::IntegerPolynomial;

/// Euler's totient.
long euler_phi(long d);

/// The d-th cyclotomic polynomial. Results are memoised process-wide.
const IntegerPolynomial& cyclotomic(long d);

struct CyclotomicFactor {
  long index;         // d in Φ_d
  int multiplicity;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

/// p = sign · core · Π Φ_d^multiplicity, with core free of cyclotomic factors.
struct CyclotomicSplit {
  int sign = 1;
  std::vector<CyclotomicFactor> factors;
  IntegerPolynomial core;

  IntegerPolynomial reconstruct() const;
  bool core_is_constant() const { return core.degree() <= 0; }
};

/// Exact trial division by every Φ_d with φ(d) ≤ deg p. Throws InvalidInput on p = 0.
CyclotomicSplit strip_cyclotomic(const IntegerPolynomial& p);

}  // namespace cremona::spectra

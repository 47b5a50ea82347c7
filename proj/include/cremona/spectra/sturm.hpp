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

#include <optional>
#include <vector>

#include "cremona/arith/big_float.hpp"
#include "cremona/arith/polynomial.hpp"

namespace cremona::spectra {

using arith::RationalPolynomial;

/// Sturm chain of the squarefree part of p.
class SturmChain {
 public:
  explicit SturmChain(const RationalPolynomial& p);

  /// Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;
  /// Number of distinct real roots in (a, ∞).
  int count_roots_above(const mpq_class& a) const;

  const RationalPolynomial& squarefree() const { return chain_.front(); }

 private:
  int variations_at(const mpq_class& x) const;
  int variations_at_infinity() const;

  std::vector<RationalPolynomial> chain_;
};

/// Largest real root with a certified rational bracket lo < root ≤ hi.
struct IsolatedRoot {
  mpq_class lower;
  mpq_class upper;
  arith::BigFloat midpoint;
  int roots_above_one = 0;  // distinct real roots in (1, ∞)
};

/// Cauchy bound: every root has modulus below the returned value.
mpq_class root_bound(const RationalPolynomial& p);

/**
 * Largest real root of `core` exceeding one, refined to width < 2^-precision_bits.
 * Empty when no real root lies in (1, ∞). Throws InvalidInput for constants.
 */
std::optional<IsolatedRoot> leading_salem_root(const arith::IntegerPolynomial& core,
                                               long precision_bits = arith::kDefaultPrecisionBits);

}  // namespace cremona::spectra

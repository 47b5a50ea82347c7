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

#include <limits>

namespace cremona::arith {

/// Q with exact GMP rationals.
class RationalField {
 public:
  using Scalar = mpq_class;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long v) const { return v; }
  Scalar from_integer(const mpz_class& v) const { return mpq_class(v); }
  Scalar from_rational(const mpq_class& v) const { return v; }
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
  bool better_pivot(const Scalar& candidate, const Scalar& current) const {
    return sgn(current) == 0 && sgn(candidate) != 0;
  }
  double magnitude(const Scalar& a) const {
    return sgn(a) == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
};

}  // namespace cremona::arith

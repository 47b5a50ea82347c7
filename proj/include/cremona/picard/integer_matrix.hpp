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

#include <vector>

#include "cremona/arith/polynomial.hpp"
#include "cremona/geometry/matrix.hpp"

namespace cremona::picard {

using IntMatrix = geometry::Matrix<mpz_class>;
using IntVector = std::vector<mpz_class>;

IntMatrix int_identity(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
bool operator==(const IntMatrix& a, const IntMatrix& b);

/// aᵀ G b
mpz_class pairing(const IntMatrix& gram, const IntVector& a, const IntVector& b);

/// det(x I - M) by fraction-free (Bareiss) elimination over Z[x].
arith::IntegerPolynomial characteristic_polynomial(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws InvalidInput when the inverse is not integral.
IntMatrix integer_inverse(const IntMatrix& m);

}  // namespace cremona::picard

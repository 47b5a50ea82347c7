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

#include "cremona/picard/integer_matrix.hpp"
#include "cremona/spectra/sturm.hpp"

namespace cremona::picard {

struct CoxeterElement {
  IntMatrix root_gram;   // -2 on the diagonal, 1 on tree edges
  IntMatrix matrix;      // product of simple reflections, branch node last
  arith::IntegerPolynomial char_poly;
  std::optional<spectra::IsolatedRoot> leading_root;  // absent when every eigenvalue has modulus 1

  /// Largest real eigenvalue above one, or 1.
  double spectral_radius() const;
};

/**
 * Coxeter element of the T-shaped diagram with arms of p, q, r nodes counted
 * with the shared branch node, so there are p + q + r - 2 simple roots.
 */
CoxeterElement coxeter_element_tpqr(int p, int q, int r, long precision_bits = 128);

/// Spectral radius of an integer matrix via its stripped characteristic polynomial.
std::optional<spectra::IsolatedRoot> spectral_root(const IntMatrix& m, long precision_bits = 128);

}  // namespace cremona::picard

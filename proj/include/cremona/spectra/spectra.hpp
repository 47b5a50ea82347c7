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
#include <string>
#include <string_view>
#include <vector>

#include "cremona/spectra/cyclotomic.hpp"
#include "cremona/spectra/sturm.hpp"

namespace cremona {

enum class Family { pk, biproj, lines };

std::string_view to_string(Family f);
/// Throws InvalidInput for unknown names.
Family parse_family(std::string_view name);

}  // namespace cremona

namespace cremona::spectra {

/// (x^{n+k} - 1)(x^2 - 1) - x (x^{k+1} - 1)(x^{n-1} - 1)
IntegerPolynomial char_poly_pk(int k, int n);

/// x^n (x^{k+2} - Σ c_j x^j) + x^2 Σ c_j x^j - 1 with c_0 = c_k = 1, other c_j = 2.
IntegerPolynomial char_poly_biproj(int k, int n);

IntegerPolynomial char_poly(Family family, int k, int n);

/// Membership in the literal list of exceptional pairs for the family.
bool listed_exceptional(Family family, int k, int n);

/// A named closed-form factorisation compared against the computed polynomial.
struct ClosedFormCheck {
  std::string name;
  IntegerPolynomial expected;
  bool holds = false;
};

struct SpectralReport {
  Family family = Family::pk;
  int k = 0;
  int n = 0;
  IntegerPolynomial full_poly;
  CyclotomicSplit split;
  std::optional<IntegerPolynomial> salem_factor;
  std::optional<IsolatedRoot> delta;
  bool exceptional = false;
  bool listed = false;           // literal list membership
  bool listing_agrees = false;   // listed == exceptional
  bool salem_reciprocal = true;  // vacuous when exceptional
  std::vector<ClosedFormCheck> closed_forms;
};

/**
 * Builds the family's polynomial, strips cyclotomic factors and isolates the
 * dynamical degree when a non-cyclotomic core remains.
 */
SpectralReport classify_exceptional(Family family, int k, int n,
                                    long precision_bits = arith::kDefaultPrecisionBits);

}  // namespace cremona::spectra

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

#include "cremona/picard/coxeter.hpp"

#include "cremona/spectra/cyclotomic.hpp"

namespace cremona::picard {

double CoxeterElement::spectral_radius() const {
  return leading_root ? leading_root->midpoint.to_double() : 1.0;
}

std::optional<spectra::IsolatedRoot> spectral_root(const IntMatrix& m, long precision_bits) {
  const auto split = spectra::strip_cyclotomic(characteristic_polynomial(m));
  if (split.core_is_constant()) return std::nullopt;
  return spectra::leading_salem_root(split.core, precision_bits);
}

CoxeterElement coxeter_element_tpqr(int p, int q, int r, long precision_bits) {
  if (p < 1 || q < 1 || r < 1) throw InvalidInput("T(p,q,r) needs p, q, r >= 1");
  const std::size_t nodes = static_cast<std::size_t>(p + q + r - 2);
  const std::size_t branch = nodes - 1;
  IntMatrix gram(nodes, nodes, mpz_class(0));
  for (std::size_t i = 0; i < nodes; ++i) gram(i, i) = -2;
  std::size_t next = 0;
  for (int arm : {p, q, r}) {
    // Arm nodes run outward from the branch node.
    std::size_t previous = branch;
    for (int j = 1; j < arm; ++j) {
      gram(previous, next) = gram(next, previous) = 1;
      previous = next++;
    }
  }
  // Reflections in root coordinates: s_j adds ⟨D, α_j⟩ to coordinate j.
  IntMatrix product = int_identity(nodes);
  for (std::size_t s = 0; s < nodes; ++s) {
    IntMatrix reflect = int_identity(nodes);
    for (std::size_t j = 0; j < nodes; ++j) reflect(s, j) += gram(j, s);
    product = product * reflect;
  }
  CoxeterElement out{gram, product, characteristic_polynomial(product), std::nullopt};
  out.leading_root = spectral_root(product, precision_bits);
  return out;
}

}  // namespace cremona::picard

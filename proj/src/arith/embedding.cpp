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

#include "cremona/arith/embedding.hpp"

namespace cremona::arith {

namespace {

template <class Coeff>
BigFloat horner(const Polynomial<Coeff>& p, const BigFloat& x) {
  BigFloat acc(0L, x.precision());
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p.coefficient(i);
  return acc;
}

/// Σ |i·c_i| bound^(i-1): a Lipschitz bound for p on [-bound, bound].
template <class Coeff>
BigFloat lipschitz(const Polynomial<Coeff>& p, const BigFloat& bound) {
  BigFloat acc(0L, bound.precision());
  for (std::size_t i = p.size(); i-- > 1;) {
    Coeff c = p.coefficient(i) * static_cast<long>(i);
    if (c < 0) c = -c;
    acc = acc * bound + c;
  }
  return acc;
}

template <class Coeff>
BigFloat abs_sum(const Polynomial<Coeff>& p, const BigFloat& bound) {
  BigFloat acc(0L, bound.precision());
  for (std::size_t i = p.size(); i-- > 0;) {
    Coeff c = p.coefficient(i);
    if (c < 0) c = -c;
    acc = acc * bound + c;
  }
  return acc;
}

void check_root(const IntegerPolynomial& modulus, const BigFloat& root, const BigFloat& radius) {
  const long prec = root.precision();
  const BigFloat reach = abs(root) + radius;
  const BigFloat residual = abs(horner(modulus, root));
  const BigFloat allowed = lipschitz(modulus, reach) * radius +
                           BigFloat::exp2(-(prec / 2), prec) * max(BigFloat(1L, prec), abs_sum(modulus, reach));
  if (residual > allowed)
    throw InconsistentEmbedding("value " + root.to_string(20) + " is not a root of " + to_string(modulus) +
                                " (residual " + residual.to_string(6) + ")");
}

}  // namespace

Enclosure nf_embed(const NumberFieldElement& a, const BigFloat& root, const BigFloat& root_radius) {
  check_root(a.field().modulus(), root, root_radius);
  const long prec = root.precision();
  const BigFloat reach = abs(root) + root_radius;
  BigFloat value = horner(a.residue(), root);
  BigFloat radius = lipschitz(a.residue(), reach) * root_radius +
                    BigFloat::exp2(-(prec - 8), prec) * max(BigFloat(1L, prec), abs_sum(a.residue(), reach));
  return {std::move(value), std::move(radius)};
}

Enclosure nf_embed(const NumberFieldElement& a, const BigFloat& root) {
  return nf_embed(a, root, BigFloat(0L, root.precision()));
}

RealEmbedding::RealEmbedding(NumberField field, BigFloat root, BigFloat root_radius)
    : field_(std::move(field)), root_(std::move(root)), radius_(std::move(root_radius)) {
  check_root(field_.modulus(), root_, radius_);
}

BigFloat RealEmbedding::operator()(const NumberFieldElement& a) const {
  if (!(a.field() == field_)) throw IncompatibleFields();
  return horner(a.residue(), root_);
}

}  // namespace cremona::arith

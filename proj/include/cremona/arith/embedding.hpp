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

#include <stdexcept>

#include "cremona/arith/big_float.hpp"
#include "cremona/arith/number_field.hpp"

namespace cremona::arith {

/// The supplied real number is not a root of the field modulus.
class InconsistentEmbedding : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A real value together with an absolute error radius.
struct Enclosure {
  BigFloat value;
  BigFloat radius;

  bool contains(const BigFloat& x) const { return abs(x - value) <= radius; }
};

/**
 * Evaluates the residue of `a` at `root`. The radius bounds the effect of the
 * root's own uncertainty plus rounding at the working precision.
 */
Enclosure nf_embed(const NumberFieldElement& a, const BigFloat& root,
                   const BigFloat& root_radius);
Enclosure nf_embed(const NumberFieldElement& a, const BigFloat& root);

/// A fixed real embedding Q(δ) → R, validated once on construction.
class RealEmbedding {
 public:
  RealEmbedding(NumberField field, BigFloat root, BigFloat root_radius);

  const NumberField& field() const { return field_; }
  const BigFloat& root() const { return root_; }
  long precision() const { return root_.precision(); }

  /// Value only; use nf_embed for the error radius.
  BigFloat operator()(const NumberFieldElement& a) const;

 private:
  NumberField field_;
  BigFloat root_;
  BigFloat radius_;
};

}  // namespace cremona::arith

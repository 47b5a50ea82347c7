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

#include <concepts>

#include "cremona/arith/big_float.hpp"
#include "cremona/arith/number_field.hpp"
#include "cremona/arith/rational_field.hpp"

namespace cremona::arith {

/// A scalar backend: a context object that mints and compares its scalars.
template <class F>
concept ScalarField = requires(const F& f, const typename F::Scalar& a, long i, const mpq_class& q) {
  typename F::Scalar;
  { f.zero() } -> std::same_as<typename F::Scalar>;
  { f.one() } -> std::same_as<typename F::Scalar>;
  { f.from_int(i) } -> std::same_as<typename F::Scalar>;
  { f.from_rational(q) } -> std::same_as<typename F::Scalar>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.better_pivot(a, a) } -> std::same_as<bool>;
  { f.magnitude(a) } -> std::same_as<double>;
  { a + a } -> std::convertible_to<typename F::Scalar>;
  { a - a } -> std::convertible_to<typename F::Scalar>;
  { a * a } -> std::convertible_to<typename F::Scalar>;
  { a / a } -> std::convertible_to<typename F::Scalar>;
  { -a } -> std::convertible_to<typename F::Scalar>;
};

static_assert(ScalarField<NumberField>);
static_assert(ScalarField<FloatField>);
static_assert(ScalarField<RationalField>);

}  // namespace cremona::arith

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
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/geometry/projective.hpp"

namespace cremona::geometry {

/// A parameter on the cuspidal curve: a finite scalar or the cusp at infinity.
template <class S>
class CurveParam {
 public:
  CurveParam(S t) : t_(std::move(t)) {}  // NOLINT: implicit by design
  static CurveParam infinity() { return CurveParam(); }

  bool is_infinity() const { return !t_.has_value(); }
  const S& value() const {
    if (!t_) throw std::logic_error("curve parameter is the cusp at infinity");
    return *t_;
  }

 private:
  CurveParam() = default;
  std::optional<S> t_;
};

class NotOnCurve : public std::domain_error {
 public:
  explicit NotOnCurve(std::size_t index)
      : std::domain_error("point is not on the curve: coordinate " + std::to_string(index) + " disagrees"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Coordinates 1, t, ..., t^{k-1}, t^{k+1} (the t^k slot is skipped).
template <arith::ScalarField F>
std::vector<typename F::Scalar> curve_coords(const F& field, const typename F::Scalar& t, std::size_t k) {
  using S = typename F::Scalar;
  std::vector<S> c;
  c.reserve(k + 1);
  S power = field.one();
  for (std::size_t i = 0; i < k; ++i) {
    c.push_back(power);
    power *= t;
  }
  c.push_back(power * t);
  return c;
}

/// γ(t) = [1 : t : ... : t^{k-1} : t^{k+1}], γ(∞) = e_k.
template <arith::ScalarField F>
ProjectivePoint<typename F::Scalar> gamma_eval(const F& field, const CurveParam<typename F::Scalar>& t,
                                               std::size_t k) {
  if (k < 2) throw InvalidInput("curve needs k >= 2");
  if (t.is_infinity()) return basis_point(field, k, k);
  return {field, curve_coords(field, t.value(), k)};
}

/// (γ(t), γ(t-1)); both factors sit at the cusp when t = ∞.
template <arith::ScalarField F>
BiProjectivePoint<typename F::Scalar> gamma1_eval(const F& field, const CurveParam<typename F::Scalar>& t,
                                                  std::size_t k) {
  if (t.is_infinity()) return {gamma_eval(field, t, k), gamma_eval(field, t, k)};
  using Param = CurveParam<typename F::Scalar>;
  return {gamma_eval(field, t, k), gamma_eval(field, Param(t.value() - field.one()), k)};
}

/// Inverse of gamma_eval. Throws NotOnCurve naming the first inconsistent coordinate.
template <arith::ScalarField F>
CurveParam<typename F::Scalar> param_recover(const F& field, const ProjectivePoint<typename F::Scalar>& p,
                                             std::size_t k) {
  if (p.size() != k + 1) throw InvalidInput("point dimension does not match k");
  if (field.is_zero(p[0])) {
    for (std::size_t i = 1; i < k; ++i)
      if (!field.is_zero(p[i])) throw NotOnCurve(i);
    return CurveParam<typename F::Scalar>::infinity();
  }
  const typename F::Scalar inv = field.one() / p[0];
  const typename F::Scalar t = p[1] * inv;
  const auto expected = curve_coords(field, t, k);
  for (std::size_t i = 2; i <= k; ++i)
    if (!field.equal(p[i] * inv, expected[i])) throw NotOnCurve(i);
  return t;
}

/// Second-factor parameter check for (γ(t), γ(t-1)); returns t.
template <arith::ScalarField F>
CurveParam<typename F::Scalar> param_recover_biproj(const F& field, const BiProjectivePoint<typename F::Scalar>& p,
                                                    std::size_t k) {
  auto t = param_recover(field, p.x, k);
  auto s = param_recover(field, p.y, k);
  if (t.is_infinity() != s.is_infinity()) throw NotOnCurve(0);
  if (!t.is_infinity() && !field.equal(t.value() - field.one(), s.value())) throw NotOnCurve(1);
  return t;
}

/// diag(1, λ, ..., λ^{k-1}, λ^{k+1}); maps γ(t) to γ(λt).
template <arith::ScalarField F>
LinearMap<typename F::Scalar> t_lambda(const F& field, const typename F::Scalar& lambda, std::size_t k) {
  const auto d = curve_coords(field, lambda, k);
  auto m = Matrix<typename F::Scalar>::identity(field, k + 1);
  for (std::size_t i = 0; i <= k; ++i) m(i, i) = d[i];
  return {field, std::move(m)};
}

/**
 * Pulls the hyperplane Σ a_i x_i = 0 back along γ: returns the coefficients of
 * a_0 + a_1 t + ... + a_{k-1} t^{k-1} + a_k t^{k+1}, low degree first. The t^k
 * coefficient is always zero, so intersection parameters sum to zero.
 */
template <class S>
std::vector<S> hyperplane_section(const std::vector<S>& a, const S& zero) {
  const std::size_t k = a.size() - 1;
  std::vector<S> poly(k + 2, zero);
  for (std::size_t i = 0; i < k; ++i) poly[i] = a[i];
  poly[k + 1] = a[k];
  return poly;
}

/// Columns γ(t_j) for the given parameters.
template <arith::ScalarField F>
Matrix<typename F::Scalar> curve_point_matrix(const F& field, const std::vector<typename F::Scalar>& params,
                                              std::size_t k) {
  Matrix<typename F::Scalar> m(k + 1, params.size(), field.zero());
  for (std::size_t j = 0; j < params.size(); ++j) m.set_column(j, curve_coords(field, params[j], k));
  return m;
}

}  // namespace cremona::geometry

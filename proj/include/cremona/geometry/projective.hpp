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

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cremona/geometry/matrix.hpp"

namespace cremona::geometry {

/// The point lies where J (or a product involution) is undefined.
class IndeterminacyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Homogeneous coordinates [x_0 : ... : x_k]; never the zero vector.
template <class S>
class ProjectivePoint {
 public:
  template <arith::ScalarField F>
  ProjectivePoint(const F& field, std::vector<S> coords) : x_(std::move(coords)) {
    if (x_.size() < 2) throw InvalidInput("projective point needs at least two coordinates");
    if (std::ranges::all_of(x_, [&](const S& v) { return field.is_zero(v); }))
      throw InvalidInput("the zero vector is not a projective point");
  }

  std::size_t size() const { return x_.size(); }
  /// k for a point of P^k.
  std::size_t dimension() const { return x_.size() - 1; }
  const S& operator[](std::size_t i) const { return x_[i]; }
  const std::vector<S>& coords() const { return x_; }

 private:
  std::vector<S> x_;
};

template <class S>
struct BiProjectivePoint {
  ProjectivePoint<S> x;
  ProjectivePoint<S> y;
};

/// A point of (P^k)^m, one factor per entry.
template <class S>
using MultiPoint = std::vector<ProjectivePoint<S>>;

/// e_j in P^k.
template <arith::ScalarField F>
ProjectivePoint<typename F::Scalar> basis_point(const F& field, std::size_t k, std::size_t j) {
  std::vector<typename F::Scalar> c(k + 1, field.zero());
  c.at(j) = field.one();
  return {field, std::move(c)};
}

/// [1 : ... : 1] in P^k.
template <arith::ScalarField F>
ProjectivePoint<typename F::Scalar> unit_point(const F& field, std::size_t k) {
  return {field, std::vector<typename F::Scalar>(k + 1, field.one())};
}

/// Index of the coordinate the field prefers as a scale reference.
template <arith::ScalarField F>
std::size_t reference_index(const F& field, const std::vector<typename F::Scalar>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (field.better_pivot(v[i], v[best])) best = i;
  return best;
}

/// Scales so that the reference coordinate equals one.
template <arith::ScalarField F>
ProjectivePoint<typename F::Scalar> normalized(const F& field, const ProjectivePoint<typename F::Scalar>& p) {
  const auto r = reference_index(field, p.coords());
  const typename F::Scalar inv = field.one() / p[r];
  std::vector<typename F::Scalar> c;
  c.reserve(p.size());
  for (const auto& v : p.coords()) c.push_back(v * inv);
  c[r] = field.one();
  return {field, std::move(c)};
}

/// Largest coordinate gap after normalising both points by the same index.
template <arith::ScalarField F>
double projective_residual(const F& field, const ProjectivePoint<typename F::Scalar>& p,
                           const ProjectivePoint<typename F::Scalar>& q) {
  if (p.size() != q.size()) throw InvalidInput("points live in different dimensions");
  const auto r = reference_index(field, p.coords());
  if (field.is_zero(q[r])) return field.magnitude(field.one());
  const typename F::Scalar ip = field.one() / p[r];
  const typename F::Scalar iq = field.one() / q[r];
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, field.magnitude(p[i] * ip - q[i] * iq));
  return worst;
}

/// Equality up to a global scalar.
template <arith::ScalarField F>
bool projective_equal(const F& field, const ProjectivePoint<typename F::Scalar>& p,
                      const ProjectivePoint<typename F::Scalar>& q) {
  if (p.size() != q.size()) return false;
  const auto r = reference_index(field, p.coords());
  if (field.is_zero(q[r])) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!field.equal(p[i] * q[r], q[i] * p[r])) return false;
  return true;
}

namespace detail {

/// out[i] = Π_{j≠i} x_j via prefix and suffix products.
template <class S>
std::vector<S> products_except(const std::vector<S>& x, const S& one) {
  const std::size_t n = x.size();
  std::vector<S> out(n, one);
  S acc = one;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = acc;
    acc *= x[i];
  }
  acc = one;
  for (std::size_t i = n; i-- > 0;) {
    out[i] *= acc;
    acc *= x[i];
  }
  return out;
}

template <arith::ScalarField F>
std::size_t count_zeros(const F& field, const std::vector<typename F::Scalar>& v) {
  return static_cast<std::size_t>(std::ranges::count_if(v, [&](const auto& c) { return field.is_zero(c); }));
}

template <arith::ScalarField F>
ProjectivePoint<typename F::Scalar> checked_point(const F& field, std::vector<typename F::Scalar> v,
                                                  const char* what) {
  if (count_zeros(field, v) == v.size()) throw IndeterminacyError(what);
  return {field, std::move(v)};
}

}  // namespace detail

/// Whether p lies on two coordinate hyperplanes (the indeterminacy locus of J).
template <arith::ScalarField F>
bool in_indeterminacy_of_J(const F& field, const ProjectivePoint<typename F::Scalar>& p) {
  return detail::count_zeros(field, p.coords()) >= 2;
}

/// Standard involution in product form: coordinate i is Π_{j≠i} x_j.
template <arith::ScalarField F>
ProjectivePoint<typename F::Scalar> apply_J(const F& field, const ProjectivePoint<typename F::Scalar>& p) {
  if (in_indeterminacy_of_J(field, p))
    throw IndeterminacyError("J is undefined on points with two vanishing coordinates");
  return {field, detail::products_except(p.coords(), field.one())};
}

/**
 * Involution on (P^k)^m: (x, y^1, ..., y^{m-1}) ↦ (y^1/x, ..., y^{m-1}/x, 1/x),
 * cleared of denominators by Π x_j.
 */
template <arith::ScalarField F>
MultiPoint<typename F::Scalar> apply_J_multi(const F& field, const MultiPoint<typename F::Scalar>& p) {
  using S = typename F::Scalar;
  if (p.size() < 2) throw InvalidInput("multi-projective involution needs at least two factors");
  const auto cofactors = detail::products_except(p[0].coords(), field.one());
  MultiPoint<S> out;
  out.reserve(p.size());
  for (std::size_t l = 1; l < p.size(); ++l) {
    if (p[l].size() != cofactors.size()) throw InvalidInput("factor dimension mismatch");
    std::vector<S> c;
    c.reserve(cofactors.size());
    for (std::size_t i = 0; i < cofactors.size(); ++i) c.push_back(p[l][i] * cofactors[i]);
    out.push_back(detail::checked_point(field, std::move(c), "product involution is undefined here"));
  }
  out.push_back(detail::checked_point(field, cofactors, "product involution is undefined here"));
  return out;
}

/// Inverse of apply_J_multi: (x^1, ..., x^{m-1}, y) ↦ (1/y, x^1/y, ..., x^{m-1}/y).
template <arith::ScalarField F>
MultiPoint<typename F::Scalar> apply_J_multi_inverse(const F& field, const MultiPoint<typename F::Scalar>& p) {
  using S = typename F::Scalar;
  if (p.size() < 2) throw InvalidInput("multi-projective involution needs at least two factors");
  const auto cofactors = detail::products_except(p.back().coords(), field.one());
  MultiPoint<S> out;
  out.reserve(p.size());
  out.push_back(detail::checked_point(field, cofactors, "inverse product involution is undefined here"));
  for (std::size_t l = 0; l + 1 < p.size(); ++l) {
    std::vector<S> c;
    c.reserve(cofactors.size());
    for (std::size_t i = 0; i < cofactors.size(); ++i) c.push_back(p[l][i] * cofactors[i]);
    out.push_back(detail::checked_point(field, std::move(c), "inverse product involution is undefined here"));
  }
  return out;
}

template <arith::ScalarField F>
BiProjectivePoint<typename F::Scalar> apply_J_biproj(const F& field, const BiProjectivePoint<typename F::Scalar>& p) {
  auto r = apply_J_multi(field, MultiPoint<typename F::Scalar>{p.x, p.y});
  return {std::move(r[0]), std::move(r[1])};
}

template <arith::ScalarField F>
BiProjectivePoint<typename F::Scalar> apply_J_biproj_inverse(const F& field,
                                                             const BiProjectivePoint<typename F::Scalar>& p) {
  auto r = apply_J_multi_inverse(field, MultiPoint<typename F::Scalar>{p.x, p.y});
  return {std::move(r[0]), std::move(r[1])};
}

/// M·p, rescaled so the reference coordinate is one.
template <arith::ScalarField F>
ProjectivePoint<typename F::Scalar> apply_linear(const F& field, const LinearMap<typename F::Scalar>& m,
                                                 const ProjectivePoint<typename F::Scalar>& p) {
  if (m.dimension() != p.size()) throw InvalidInput("linear map and point dimensions differ");
  return normalized(field, ProjectivePoint<typename F::Scalar>(field, m.matrix() * p.coords()));
}

}  // namespace cremona::geometry

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
#include <vector>

#include "cremona/arith/embedding.hpp"
#include "cremona/geometry/curve.hpp"
#include "cremona/spectra/spectra.hpp"

namespace cremona::construct {

using arith::NumberField;
using Q = arith::NumberFieldElement;
using QMatrix = geometry::Matrix<Q>;
using QParam = geometry::CurveParam<Q>;

/// The requested (k, n) has a purely cyclotomic polynomial, so δ would be a root of unity.
class ExceptionalPairError : public ExceptionalPair {
 public:
  ExceptionalPairError(Family family, int k, int n);
};

/// A self-consistency comparison recorded during construction.
struct ConsistencyCheck {
  std::string name;
  bool holds = false;
  std::string note;
  /// Compares against an alternative formula; never part of the pass verdict.
  bool comparison_only = false;
};

/**
 * Everything the verifier needs, over one scalar type. Matrices are expressed
 * in the frame where the marked points T(e_j) are the coordinate vertices, so
 * the map reads F = (L_0 × ... × L_{m-1}) ∘ J.
 */
template <class S>
struct MapData {
  Family family = Family::pk;
  int k = 0;
  int n = 0;   // orbit parameter; 0 when the map carries no orbit data
  int m = 1;   // number of projective factors
  S delta;
  S tau;
  std::vector<S> t_plus;                          // parameters of T(e_j)
  std::vector<geometry::CurveParam<S>> s_params;  // parameters of S(e_j)
  std::vector<geometry::Matrix<S>> L;             // one per factor
  std::vector<geometry::Matrix<S>> frames;        // T per factor, columns on the curve
  S law_multiplier;                               // F|C : t ↦ a t + b
  S law_shift;
};

struct LinesData {
  Q shift;              // v
  std::vector<Q> scale; // s_j
  int orbit_length = 0; // points in the long orbit
};

struct CoxeterConstruction {
  MapData<Q> map;
  NumberField field;
  arith::IntegerPolynomial full_poly;
  spectra::IsolatedRoot root;  // real embedding of δ
  std::vector<Q> t_minus;      // biproj only
  std::optional<LinesData> lines;
  std::vector<ConsistencyCheck> checks;

  bool all_checks_hold() const;
};

/// Q(δ) over the Salem factor of the family's polynomial. Throws ExceptionalPairError.
struct SalemField {
  NumberField field;
  arith::IntegerPolynomial full_poly;
  spectra::IsolatedRoot root;
};
SalemField salem_field(Family family, int k, int n, long precision_bits = arith::kDefaultPrecisionBits);

/// t_j^+ for the single-space family, j = 0..k.
std::vector<Q> tplus_pk(int k, int n, const Q& delta);
/// τ = (k-1)/(k+1) · δ · Σ t_j^+.
Q tau_pk(int k, const Q& delta, const std::vector<Q>& t_plus);
/// Parameters of S(e_j): δ t_j^+ - 2τ/(k-1).
std::vector<QParam> spoints_pk(int k, const Q& delta, const std::vector<Q>& t_plus, const Q& tau);
/// Closed-form L: row 0 = (0,...,0,1), subdiagonal β_i, last column 1 - β_i.
geometry::LinearMap<Q> build_L_pk(int k, int n, const Q& delta);

struct BiprojParameters {
  std::vector<Q> t_plus;
  std::vector<Q> t_minus;
  Q tau;
  std::vector<Q> alt_recurrence_t_plus;  // constant (k - 2δ) in the t^- recurrence
  std::vector<Q> alt_closed_t_plus;
};
/// Parameters solved from t_{j+1}^+ = t_j^- = δ(t_j^+ - 2) - 1 and Σ t_j^- = -(k+1)δ.
BiprojParameters tplus_biproj(int k, int n, const Q& delta);
/// L_1, L_2 with s_1 = 1 and s_2 = (δ+1)²/δ.
std::pair<geometry::LinearMap<Q>, geometry::LinearMap<Q>> build_L_biproj(int k, int n, const Q& delta);
/// The alternative scale (δ²+δ+1)/δ, kept for comparison.
Q alternative_s2(const Q& delta);

/// L_0, ..., L_{m-1}: row 0 = (0,...,0,s_j), subdiagonal v, last column s_j - v.
std::vector<geometry::LinearMap<Q>> build_L_lines(int k, int m, int n, const Q& alpha);

/// Columns c_i γ(t_i) scaled so that (1,...,1) maps to e_k. Throws SingularMatrix.
template <arith::ScalarField F>
geometry::Matrix<typename F::Scalar> curve_frame(const F& field, const std::vector<typename F::Scalar>& params,
                                                 std::size_t k) {
  auto m = geometry::curve_point_matrix(field, params, k);
  std::vector<typename F::Scalar> ek(k + 1, field.zero());
  ek[k] = field.one();
  const auto scale = geometry::solve(field, m, ek);
  for (std::size_t j = 0; j <= k; ++j)
    for (std::size_t i = 0; i <= k; ++i) m(i, j) *= scale[j];
  return m;
}

/// Closed-form frame weights 1 / ((Σ t) Π_{j≠i} (t_j - t_i)).
std::vector<Q> frame_weights_closed_form(const std::vector<Q>& params);

/// Full construction for pk or biproj with consistency checks. Throws ExceptionalPairError.
CoxeterConstruction construct(Family family, int k, int n, long precision_bits = arith::kDefaultPrecisionBits);

/// Lines family on (P^k)^m, with α the Salem root of the matching T-shaped Coxeter element.
CoxeterConstruction construct_lines(int k, int m, int n, long precision_bits = arith::kDefaultPrecisionBits);

/**
 * Single-space basic map from arbitrary distinct parameters t^+ with Σ t^+ ≠ 0
 * and multiplier δ in `field`: S(e_j) = γ(δ t_j^+ - 2τ/(k-1)) and L = T^{-1} S.
 * No orbit data is attached (n = 0).
 */
MapData<Q> build_basic_map(const NumberField& field, const Q& delta, const std::vector<Q>& t_plus);

/// Entrywise image under a real embedding.
MapData<arith::BigFloat> embed(const MapData<Q>& data, const arith::RealEmbedding& embedding);

/// Real embedding of δ at the requested working precision.
arith::RealEmbedding real_embedding(const CoxeterConstruction& c, long precision_bits);

}  // namespace cremona::construct

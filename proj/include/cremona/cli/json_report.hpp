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

#include <string>

#include <json.hpp>

#include "cremona/construct/construct.hpp"
#include "cremona/picard/trace.hpp"
#include "cremona/spectra/spectra.hpp"
#include "cremona/verify/verify.hpp"

namespace cremona::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kDecimalDigits = 30;

/// Integer coefficients, low degree first; values beyond 64 bits become strings.
Json integer_json(const mpz_class& v);
Json polynomial_json(const arith::IntegerPolynomial& p);
Json rational_json(const mpq_class& q);
Json decimal_json(const arith::BigFloat& x);
Json root_json(const spectra::IsolatedRoot& root);
/// {"residue": [...], "decimal": "..."}; the residue is reduced modulo the field's modulus.
Json element_json(const construct::Q& a, const arith::RealEmbedding& embedding);
Json scalar_json(const construct::Q& a, const arith::RealEmbedding& embedding);
Json scalar_json(const arith::BigFloat& a, const arith::RealEmbedding& embedding);
Json int_matrix_json(const picard::IntMatrix& m);

template <class S>
Json param_json(const std::optional<geometry::CurveParam<S>>& p, const arith::RealEmbedding& e) {
  if (!p) return nullptr;
  if (p->is_infinity()) return "infinity";
  return scalar_json(p->value(), e);
}

template <class S>
Json matrix_json(const geometry::Matrix<S>& m, const arith::RealEmbedding& e) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j), e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json conditions_json(const std::vector<verify::ConditionResult>& conditions);

Json spectral_json(const spectra::SpectralReport& r);
Json construction_json(const construct::CoxeterConstruction& c, const arith::RealEmbedding& e);

template <class S>
Json orbit_json(const verify::OrbitCheckReport<S>& r, const arith::RealEmbedding& e) {
  Json steps = Json::array();
  for (const auto& s : r.orbit)
    steps.push_back({{"step", s.step}, {"parameter", param_json(s.param, e)}, {"oracle", param_json(s.oracle, e)}});
  return {{"conditions", conditions_json(r.conditions)},
          {"orbit", std::move(steps)},
          {"multiplier_measured", r.multiplier_measured ? scalar_json(*r.multiplier_measured, e) : Json(nullptr)},
          {"multiplier_matches_delta", r.multiplier_matches},
          {"translation_guard_triggered", r.translation_guard},
          {"failure_step", r.failure_step ? Json(*r.failure_step) : Json(nullptr)},
          {"max_residual", r.max_residual},
          {"passed", r.passed()}};
}

template <class S>
Json curve_json(const verify::CurveReport<S>& r, const arith::RealEmbedding& e) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"t", param_json(std::optional(s.t), e)},
                       {"image", param_json(s.image, e)},
                       {"expected", param_json(std::optional(s.expected), e)},
                       {"residual", s.residual},
                       {"passed", s.passed}});
  return {{"samples", std::move(samples)},
          {"fixed_point_ok", r.fixed_point_ok},
          {"cusp_ok", r.cusp_ok},
          {"resampled", r.resampled},
          {"multiplier_measured", r.multiplier_measured ? scalar_json(*r.multiplier_measured, e) : Json(nullptr)},
          {"translation_guard_triggered", r.translation_guard},
          {"passed", r.passed()}};
}

template <class S>
Json distinctness_json(const verify::DistinctnessReport<S>& r, const arith::RealEmbedding& e) {
  Json params = Json::array();
  for (const auto& p : r.params) params.push_back(scalar_json(p, e));
  Json collision = nullptr;
  if (r.collision) collision = {r.collision->first, r.collision->second};
  return {{"parameters", std::move(params)}, {"distinct", r.distinct}, {"collision", std::move(collision)}};
}

template <class S>
Json lines_orbit_json(const verify::LinesOrbitReport<S>& r) {
  return {{"conditions", conditions_json(r.conditions)},
          {"line_indices", r.lines},
          {"closure_step", r.closure_step ? Json(*r.closure_step) : Json(nullptr)},
          {"failure_step", r.failure_step ? Json(*r.failure_step) : Json(nullptr)},
          {"passed", r.passed()}};
}

Json trace_json(const picard::TraceReport& r, const arith::RealEmbedding& e);

/// Pretty-printed with sorted keys and a trailing newline.
std::string serialize(const Json& j);

}  // namespace cremona::cli

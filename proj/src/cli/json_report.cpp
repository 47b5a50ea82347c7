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

#include "cremona/cli/json_report.hpp"

namespace cremona::cli {

Json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json polynomial_json(const arith::IntegerPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_json(c));
  return out;
}

Json rational_json(const mpq_class& q) { return q.get_str(); }

Json decimal_json(const arith::BigFloat& x) { return x.to_string(kDecimalDigits); }

Json root_json(const spectra::IsolatedRoot& root) {
  return {{"decimal", decimal_json(root.midpoint)},
          {"interval", {rational_json(root.lower), rational_json(root.upper)}},
          {"real_roots_above_one", root.roots_above_one}};
}

Json element_json(const construct::Q& a, const arith::RealEmbedding& embedding) {
  Json residue = Json::array();
  for (const auto& c : a.residue().coefficients()) residue.push_back(rational_json(c));
  return {{"residue", std::move(residue)}, {"decimal", decimal_json(embedding(a))}};
}

Json scalar_json(const construct::Q& a, const arith::RealEmbedding& embedding) { return element_json(a, embedding); }

Json scalar_json(const arith::BigFloat& a, const arith::RealEmbedding&) { return decimal_json(a); }

Json int_matrix_json(const picard::IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json conditions_json(const std::vector<verify::ConditionResult>& conditions) {
  Json out = Json::array();
  for (const auto& c : conditions)
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"detail", c.detail}});
  return out;
}

Json spectral_json(const spectra::SpectralReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.split.factors) factors.push_back({{"index", f.index}, {"multiplicity", f.multiplicity}});
  Json closed = Json::array();
  for (const auto& c : r.closed_forms)
    closed.push_back({{"name", c.name}, {"expected", polynomial_json(c.expected)}, {"holds", c.holds}});
  return {{"family", std::string(to_string(r.family))},
          {"k", r.k},
          {"n", r.n},
          {"polynomial", polynomial_json(r.full_poly)},
          {"cyclotomic_factors", std::move(factors)},
          {"sign", r.split.sign},
          {"salem_factor", r.salem_factor ? polynomial_json(*r.salem_factor) : Json(nullptr)},
          {"salem_factor_reciprocal", r.salem_reciprocal},
          {"delta", r.delta ? root_json(*r.delta) : Json(nullptr)},
          {"exceptional", r.exceptional},
          {"listed_exceptional", r.listed},
          {"listing_agrees", r.listing_agrees},
          {"closed_forms", std::move(closed)}};
}

Json construction_json(const construct::CoxeterConstruction& c, const arith::RealEmbedding& e) {
  const auto& d = c.map;
  Json t_plus = Json::array();
  for (const auto& t : d.t_plus) t_plus.push_back(element_json(t, e));
  Json s_params = Json::array();
  for (const auto& s : d.s_params) s_params.push_back(param_json(std::optional(s), e));
  Json matrices = Json::array();
  Json row_sums = Json::array();
  for (const auto& L : d.L) {
    matrices.push_back(matrix_json(L, e));
    Json sums = Json::array();
    for (std::size_t i = 0; i < L.rows(); ++i) {
      construct::Q s = c.field.zero();
      for (std::size_t j = 0; j < L.cols(); ++j) s += L(i, j);
      sums.push_back(element_json(s, e));
    }
    row_sums.push_back(std::move(sums));
  }
  Json checks = Json::array();
  for (const auto& ch : c.checks)
    checks.push_back({{"name", ch.name}, {"holds", ch.holds}, {"note", ch.note}, {"comparison_only", ch.comparison_only}});

  Json out = {{"family", std::string(to_string(d.family))},
              {"k", d.k},
              {"n", d.n},
              {"m", d.m},
              {"modulus", polynomial_json(c.field.modulus())},
              {"full_polynomial", polynomial_json(c.full_poly)},
              {"delta", root_json(c.root)},
              {"tau", element_json(d.tau, e)},
              {"t_plus", std::move(t_plus)},
              {"s_params", std::move(s_params)},
              {"L", std::move(matrices)},
              {"L_row_sums", std::move(row_sums)},
              {"curve_law", {{"multiplier", element_json(d.law_multiplier, e)}, {"shift", element_json(d.law_shift, e)}}},
              {"checks", std::move(checks)},
              {"all_checks_hold", c.all_checks_hold()}};
  if (!c.t_minus.empty()) {
    Json t_minus = Json::array();
    for (const auto& t : c.t_minus) t_minus.push_back(element_json(t, e));
    out["t_minus"] = std::move(t_minus);
  }
  if (c.lines) {
    Json scale = Json::array();
    for (const auto& s : c.lines->scale) scale.push_back(element_json(s, e));
    out["lines"] = {{"shift", element_json(c.lines->shift, e)},
                    {"scale", std::move(scale)},
                    {"orbit_length", c.lines->orbit_length}};
  }
  return out;
}

Json trace_json(const picard::TraceReport& r, const arith::RealEmbedding& e) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json cls = Json::array();
    for (const auto& v : s.divisor_class) cls.push_back(integer_json(v));
    samples.push_back({{"label", s.label},
                       {"class", std::move(cls)},
                       {"trace", element_json(s.trace, e)},
                       {"pushforward_trace", element_json(s.pushed_trace, e)},
                       {"pullback_trace", element_json(s.pulled_trace, e)},
                       {"pushforward_scales_by_delta", s.pushforward_scales},
                       {"pullback_scales_by_inverse_delta", s.pullback_scales}});
  }
  return {{"samples", std::move(samples)},
          {"canonical_class_invariant", r.canonical_invariant},
          {"canonical_trace_preserved", r.canonical_trace_preserved},
          {"salem_factor_divides_pullback_charpoly", r.salem_divides_pullback},
          {"salem_factor_divides_coxeter_charpoly", r.salem_divides_coxeter},
          {"passed", r.passed()}};
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cremona::cli

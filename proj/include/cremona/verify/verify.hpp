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
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/construct/construct.hpp"
#include "cremona/geometry/lines.hpp"

namespace cremona::verify {

using construct::MapData;
using geometry::CurveParam;
using geometry::MultiPoint;
using geometry::ProjectivePoint;

/// Floating-point iteration lost all significance.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(int step)
      : std::runtime_error("floating-point orbit overflowed at step " + std::to_string(step) +
                           "; raise the precision or use the exact backend") {}
};

struct ConditionResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;  // projective distance; exact backends report 0 or +inf
  std::string detail;
};

template <class S>
struct OrbitStep {
  int step;
  std::optional<CurveParam<S>> param;  // recovered through the curve frame, when on the curve
  std::optional<CurveParam<S>> oracle; // affine iteration of the curve law
};

template <class S>
struct OrbitCheckReport {
  Family family = Family::pk;
  int k = 0, n = 0, m = 1;
  std::vector<OrbitStep<S>> orbit;
  std::vector<ConditionResult> conditions;
  std::optional<S> multiplier_measured;
  bool multiplier_matches = false;
  bool translation_guard = false;  // measured multiplier equals one
  std::optional<int> failure_step;
  double max_residual = 0.0;

  bool passed() const {
    return !translation_guard && multiplier_matches &&
           std::ranges::all_of(conditions, [](const ConditionResult& c) { return c.passed; });
  }
};

template <class S>
struct CurveSample {
  CurveParam<S> t;
  std::optional<CurveParam<S>> image;  // recovered parameter of F(point)
  CurveParam<S> expected;
  bool passed = false;
  double residual = 0.0;
};

template <class S>
struct CurveReport {
  std::vector<CurveSample<S>> samples;
  bool fixed_point_ok = false;
  bool cusp_ok = false;
  std::optional<S> multiplier_measured;
  bool translation_guard = false;
  int resampled = 0;

  bool passed() const {
    return fixed_point_ok && cusp_ok && !translation_guard &&
           std::ranges::all_of(samples, [](const auto& s) { return s.passed; });
  }
};

template <class S>
struct DistinctnessReport {
  std::vector<S> params;   // the N blown-up parameters
  bool distinct = false;
  std::optional<std::pair<std::size_t, std::size_t>> collision;
};

template <class S>
struct LinesOrbitReport {
  int k = 0, m = 1, n = 0;
  int steps = 0;                               // F applications until closure
  std::vector<std::vector<std::size_t>> lines; // [step][factor] line index, away from the concurrence point
  std::vector<ConditionResult> conditions;
  std::optional<int> closure_step;
  std::optional<int> failure_step;

  bool passed() const {
    return std::ranges::all_of(conditions, [](const ConditionResult& c) { return c.passed; });
  }
};

namespace detail {

inline bool finite(const arith::NumberFieldElement&) { return true; }
inline bool finite(const arith::BigFloat& x) { return x.is_finite(); }
inline bool finite(const mpq_class&) { return true; }

template <arith::ScalarField F>
MultiPoint<typename F::Scalar> initial_point(const F& field, const MapData<typename F::Scalar>& d, std::size_t column) {
  MultiPoint<typename F::Scalar> p;
  for (const auto& L : d.L) p.emplace_back(field, L.column(column));
  return p;
}

template <arith::ScalarField F>
MultiPoint<typename F::Scalar> apply_F(const F& field, const MapData<typename F::Scalar>& d,
                                       const MultiPoint<typename F::Scalar>& p) {
  using S = typename F::Scalar;
  MultiPoint<S> jp = p.size() == 1 ? MultiPoint<S>{geometry::apply_J(field, p.front())}
                                   : geometry::apply_J_multi(field, p);
  MultiPoint<S> out;
  for (std::size_t f = 0; f < jp.size(); ++f) {
    auto image = d.L[f] * jp[f].coords();
    for (const auto& v : image)
      if (!finite(v)) throw std::overflow_error("non-finite coordinate");
    out.push_back(geometry::normalized(field, ProjectivePoint<S>(field, std::move(image))));
  }
  return out;
}

template <arith::ScalarField F>
bool indeterminate(const F& field, const MultiPoint<typename F::Scalar>& p) {
  if (p.size() == 1) return geometry::in_indeterminacy_of_J(field, p.front());
  try {
    (void)geometry::apply_J_multi(field, p);
    return false;
  } catch (const geometry::IndeterminacyError&) {
    return true;
  }
}

template <arith::ScalarField F>
double residual_to(const F& field, const MultiPoint<typename F::Scalar>& p, std::size_t vertex) {
  double worst = 0.0;
  for (const auto& factor : p)
    worst = std::max(worst, geometry::projective_residual(field, factor, geometry::basis_point(field, factor.dimension(), vertex)));
  return worst;
}

template <arith::ScalarField F>
bool equals_vertex(const F& field, const MultiPoint<typename F::Scalar>& p, std::size_t vertex) {
  return std::ranges::all_of(p, [&](const auto& factor) {
    return geometry::projective_equal(field, factor, geometry::basis_point(field, factor.dimension(), vertex));
  });
}

/// Curve parameter of a frame-coordinate point: frame_f · p_f lies on γ (shifted by f).
template <arith::ScalarField F>
std::optional<CurveParam<typename F::Scalar>> curve_param(const F& field, const MapData<typename F::Scalar>& d,
                                                          const MultiPoint<typename F::Scalar>& p) {
  using S = typename F::Scalar;
  const auto k = static_cast<std::size_t>(d.k);
  try {
    std::vector<ProjectivePoint<S>> images;
    for (std::size_t f = 0; f < p.size(); ++f) images.emplace_back(field, d.frames[f] * p[f].coords());
    if (images.size() == 1) return geometry::param_recover(field, images.front(), k);
    return geometry::param_recover_biproj(field, geometry::BiProjectivePoint<S>{images[0], images[1]}, k);
  } catch (const geometry::NotOnCurve&) {
    return std::nullopt;
  }
}

template <arith::ScalarField F>
bool params_equal(const F& field, const CurveParam<typename F::Scalar>& a, const CurveParam<typename F::Scalar>& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  return field.equal(a.value(), b.value());
}

template <class S>
CurveParam<S> apply_law(const MapData<S>& d, const CurveParam<S>& t) {
  if (t.is_infinity()) return t;
  return CurveParam<S>(d.law_multiplier * t.value() + d.law_shift);
}

/// Frame-coordinate point over curve parameter t: frame_f^{-1} γ(t - f).
template <arith::ScalarField F>
MultiPoint<typename F::Scalar> curve_point(const F& field, const std::vector<geometry::Matrix<typename F::Scalar>>& inverse_frames,
                                           const CurveParam<typename F::Scalar>& t, std::size_t k) {
  using S = typename F::Scalar;
  MultiPoint<S> out;
  for (std::size_t f = 0; f < inverse_frames.size(); ++f) {
    CurveParam<S> shifted = t.is_infinity() ? t : CurveParam<S>(t.value() - field.from_int(static_cast<long>(f)));
    const auto g = geometry::gamma_eval(field, shifted, k);
    out.emplace_back(field, inverse_frames[f] * g.coords());
  }
  return out;
}

inline ConditionResult condition(std::string name, bool passed, double residual, std::string detail = {}) {
  return {std::move(name), passed, residual, std::move(detail)};
}

}  // namespace detail

/**
 * Iterates F = L ∘ J from S(e_k) in projective coordinates and checks:
 * (a) S(e_j) = T(e_{j+1}) for j < k, (b) F^{n-1}(S(e_k)) = T(e_0),
 * (c) no earlier orbit point is indeterminate. The affine curve law is run
 * alongside as an independent oracle.
 */
template <arith::ScalarField F>
OrbitCheckReport<typename F::Scalar> verify_orbit(const F& field, const MapData<typename F::Scalar>& d) {
  using S = typename F::Scalar;
  if (d.n < 1) throw InvalidInput("map carries no orbit data");
  if (d.frames.size() != d.L.size()) throw InvalidInput("orbit verification needs curve frames");
  const auto k = static_cast<std::size_t>(d.k);
  OrbitCheckReport<S> r;
  r.family = d.family;
  r.k = d.k;
  r.n = d.n;
  r.m = d.m;

  // (a)
  {
    bool ok = true;
    double worst = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const auto p = detail::initial_point(field, d, j);
      ok = ok && detail::equals_vertex(field, p, j + 1);
      worst = std::max(worst, detail::residual_to(field, p, j + 1));
    }
    r.conditions.push_back(detail::condition("(a) S(e_j) = T(e_{j+1}) for j < k", ok, worst));
  }

  // Orbit from S(e_k).
  MultiPoint<S> p = detail::initial_point(field, d, k);
  CurveParam<S> oracle = d.s_params.at(k);
  bool clear = true, oracle_ok = true;
  std::string indeterminacy_note;
  for (int step = 0;; ++step) {
    OrbitStep<S> entry{step, detail::curve_param(field, d, p), oracle};
    const bool agrees = entry.param && detail::params_equal(field, *entry.param, oracle);
    if (!agrees && oracle_ok) {
      oracle_ok = false;
      if (!r.failure_step) r.failure_step = step;
    }
    r.orbit.push_back(std::move(entry));
    if (step == d.n - 1) break;
    if (detail::indeterminate(field, p)) {
      clear = false;
      indeterminacy_note = "orbit point " + std::to_string(step) + " lies in the indeterminacy locus";
      if (!r.failure_step) r.failure_step = step;
      break;
    }
    try {
      p = detail::apply_F(field, d, p);
    } catch (const std::overflow_error&) {
      throw PrecisionExhausted(step + 1);
    }
    oracle = detail::apply_law(d, oracle);
  }
  const bool reached_end = static_cast<int>(r.orbit.size()) == d.n;
  const bool closes = reached_end && detail::equals_vertex(field, p, 0);
  const double closure_residual = reached_end ? detail::residual_to(field, p, 0) : field.magnitude(field.one());
  r.conditions.push_back(detail::condition("(b) F^(n-1)(S(e_k)) = T(e_0)", closes, closure_residual));
  if (!closes && !r.failure_step) r.failure_step = d.n - 1;
  r.conditions.push_back(detail::condition("(c) F^j(S(e_k)) avoids I(F) for j < n-1", clear, 0.0, indeterminacy_note));
  r.conditions.push_back(detail::condition("curve oracle t -> a t + b agrees at every step", oracle_ok && reached_end, 0.0));

  // Multiplier from successive parameter gaps.
  if (r.orbit.size() >= 3) {
    const auto& a = r.orbit[0].param;
    const auto& b = r.orbit[1].param;
    const auto& c = r.orbit[2].param;
    if (a && b && c && !a->is_infinity() && !b->is_infinity() && !c->is_infinity() &&
        !field.is_zero(b->value() - a->value())) {
      S mult = (c->value() - b->value()) / (b->value() - a->value());
      r.translation_guard = field.equal(mult, field.one());
      r.multiplier_matches = field.equal(mult, d.delta);
      r.multiplier_measured = std::move(mult);
    }
  }
  for (const auto& c : r.conditions) r.max_residual = std::max(r.max_residual, c.residual);
  return r;
}

/**
 * Checks F(γ(t)) = γ(a t + b) on `samples` random rational parameters, the
 * fixed point of the law and the cusp.
 */
template <arith::ScalarField F>
CurveReport<typename F::Scalar> verify_curve_invariance(const F& field, const MapData<typename F::Scalar>& d,
                                                        int samples, std::uint64_t seed = 1) {
  using S = typename F::Scalar;
  using Param = CurveParam<S>;
  if (samples < 1) throw InvalidInput("need at least one sample");
  if (d.frames.size() != d.L.size() || d.frames.empty()) throw InvalidInput("curve check needs curve frames");
  const auto k = static_cast<std::size_t>(d.k);
  std::vector<geometry::Matrix<S>> inverse_frames;
  for (const auto& T : d.frames) inverse_frames.push_back(geometry::inverse(field, T));

  auto check = [&](const Param& t) {
    CurveSample<S> s{t, std::nullopt, detail::apply_law(d, t), false, 0.0};
    const auto image = detail::apply_F(field, d, detail::curve_point(field, inverse_frames, t, k));
    s.image = detail::curve_param(field, d, image);
    const auto target = detail::curve_point(field, inverse_frames, s.expected, k);
    for (std::size_t f = 0; f < image.size(); ++f)
      s.residual = std::max(s.residual, geometry::projective_residual(field, image[f], target[f]));
    s.passed = s.image && detail::params_equal(field, *s.image, s.expected);
    return s;
  };

  CurveReport<S> r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numer(-50, 50), denom(1, 17);
  const int max_retries = 10 * samples;
  while (static_cast<int>(r.samples.size()) < samples) {
    mpq_class q(numer(rng), denom(rng));
    q.canonicalize();
    const Param t(field.from_rational(q));
    try {
      r.samples.push_back(check(t));
    } catch (const geometry::IndeterminacyError&) {
      if (++r.resampled > max_retries) throw std::runtime_error("could not sample away from the indeterminacy locus");
    }
  }
  // Fixed point b / (1 - a) when a ≠ 1, and the cusp.
  if (!field.equal(d.law_multiplier, field.one())) {
    const Param fixed(d.law_shift / (field.one() - d.law_multiplier));
    const auto s = check(fixed);
    r.fixed_point_ok = s.passed && detail::params_equal(field, *s.image, fixed);
  }
  {
    const auto s = check(Param::infinity());
    r.cusp_ok = s.passed && s.image && s.image->is_infinity();
  }
  // Multiplier from the first two samples.
  if (r.samples.size() >= 2 && r.samples[0].image && r.samples[1].image && !r.samples[0].image->is_infinity() &&
      !r.samples[1].image->is_infinity()) {
    const S dt = r.samples[1].t.value() - r.samples[0].t.value();
    if (!field.is_zero(dt)) {
      S mult = (r.samples[1].image->value() - r.samples[0].image->value()) / dt;
      r.translation_guard = field.equal(mult, field.one());
      r.multiplier_measured = std::move(mult);
    }
  }
  return r;
}

/// Pairwise distinctness of a parameter list; reports the first collision.
template <arith::ScalarField F>
DistinctnessReport<typename F::Scalar> params_distinct(const F& field, std::vector<typename F::Scalar> params) {
  DistinctnessReport<typename F::Scalar> r;
  r.distinct = true;
  for (std::size_t i = 0; i < params.size() && r.distinct; ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (field.equal(params[i], params[j])) {
        r.distinct = false;
        r.collision = std::make_pair(i, j);
        break;
      }
  r.params = std::move(params);
  return r;
}

/**
 * The N = k + n blown-up parameters: t_1^+, ..., t_k^+ and the long orbit
 * traced backwards from t_0^+ under the curve law.
 */
template <arith::ScalarField F>
DistinctnessReport<typename F::Scalar> verify_distinctness(const F& field, const MapData<typename F::Scalar>& d) {
  using S = typename F::Scalar;
  if (d.n < 1 || d.t_plus.empty()) throw InvalidInput("distinctness needs orbit data");
  std::vector<S> params(d.t_plus.begin() + 1, d.t_plus.end());
  S t = d.t_plus.front();
  for (int i = 0; i < d.n; ++i) {
    params.push_back(t);
    t = (t - d.law_shift) / d.law_multiplier;
  }
  return params_distinct(field, std::move(params));
}

/**
 * Lines family: iterates from (L_0 e_k, ..., L_{m-1} e_k) until every factor
 * reaches e_0, checking that each orbit point stays on the union of lines
 * through [1:...:1] and the vertices and that the line index advances cyclically.
 */
template <arith::ScalarField F>
LinesOrbitReport<typename F::Scalar> verify_lines_orbit(const F& field, const MapData<typename F::Scalar>& d,
                                                        int expected_steps) {
  using S = typename F::Scalar;
  if (d.family != Family::lines) throw InvalidInput("not a lines-family map");
  const auto k = static_cast<std::size_t>(d.k);
  LinesOrbitReport<S> r;
  r.k = d.k;
  r.m = d.m;
  r.n = d.n;

  {
    bool ok = true;
    double worst = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const auto p = detail::initial_point(field, d, j);
      ok = ok && detail::equals_vertex(field, p, j + 1);
      worst = std::max(worst, detail::residual_to(field, p, j + 1));
    }
    r.conditions.push_back(detail::condition("(a) S(e_j) = T(e_{j+1}) for j < k", ok, worst));
  }

  MultiPoint<S> p = detail::initial_point(field, d, k);
  bool on_union = true, clear = true;
  for (int step = 0; step <= expected_steps; ++step) {
    if (detail::equals_vertex(field, p, 0)) {
      r.closure_step = step;
      break;
    }
    std::vector<std::size_t> idx;
    for (const auto& factor : p) {
      const auto hits = geometry::line_union_membership(field, factor, geometry::LineChart::map_chart);
      if (hits.empty()) {
        on_union = false;
        if (!r.failure_step) r.failure_step = step;
      } else if (hits.size() == 1) {
        idx.push_back(hits.front().line);
      }
    }
    r.lines.push_back(std::move(idx));
    if (detail::indeterminate(field, p)) {
      clear = false;
      if (!r.failure_step) r.failure_step = step;
      break;
    }
    try {
      p = detail::apply_F(field, d, p);
    } catch (const std::overflow_error&) {
      throw PrecisionExhausted(step + 1);
    }
  }
  r.steps = r.closure_step.value_or(-1);

  // Each factor's line index must advance by one (mod k+1) per step.
  bool cyclic = true;
  for (std::size_t s = 1; s < r.lines.size(); ++s) {
    const auto& prev = r.lines[s - 1];
    const auto& cur = r.lines[s];
    if (prev.size() != cur.size()) continue;
    for (std::size_t f = 0; f < cur.size(); ++f)
      if (cur[f] != (prev[f] + 1) % (k + 1)) cyclic = false;
  }
  r.conditions.push_back(detail::condition("orbit stays on the union of lines", on_union, 0.0));
  r.conditions.push_back(detail::condition("line index advances cyclically", cyclic, 0.0));
  r.conditions.push_back(detail::condition("orbit avoids the indeterminacy locus", clear, 0.0));
  r.conditions.push_back(detail::condition("orbit closes at (e_0, ..., e_0) after the predicted number of steps",
                                           r.closure_step == expected_steps, 0.0,
                                           "closure after " + std::to_string(r.steps) + " steps"));
  return r;
}

/// Copy of an exact map with L_0's subdiagonal entry β_i shifted by `by`.
MapData<arith::NumberFieldElement> perturb_beta(const MapData<arith::NumberFieldElement>& d, int i, const mpq_class& by);

/**
 * δ = 1 control over Q: a basic map with distinct parameters t^+ = (1, 2, ..., k+1),
 * whose restriction to the curve is a pure translation.
 */
struct TranslationControl {
  arith::NumberField field;
  MapData<arith::NumberFieldElement> map;
};
TranslationControl translation_control(int k);

}  // namespace cremona::verify

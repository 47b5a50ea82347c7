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

#include "cremona/construct/construct.hpp"

#include <algorithm>

#include "cremona/picard/coxeter.hpp"

namespace cremona::construct {

namespace {

using geometry::LinearMap;

mpq_class frac(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

Q sum(const std::vector<Q>& v, const Q& zero) {
  Q acc = zero;
  for (const auto& x : v) acc += x;
  return acc;
}

/// Matrix with row 0 = (0,...,0,s), subdiagonal sub[i], last column s - sub[i].
QMatrix shaped_matrix(const NumberField& f, int k, const Q& s, const std::vector<Q>& sub) {
  QMatrix m(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k + 1), f.zero());
  const auto kk = static_cast<std::size_t>(k);
  m(0, kk) = s;
  for (std::size_t i = 1; i <= kk; ++i) {
    m(i, i - 1) = sub[i - 1];
    m(i, kk) = s - sub[i - 1];
  }
  return m;
}

bool matrices_equal(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// a = λ b for some nonzero λ.
bool matrices_proportional(const QMatrix& a, const QMatrix& b) {
  std::optional<Q> ratio;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j).is_zero() != a(i, j).is_zero()) return false;
      if (b(i, j).is_zero()) continue;
      Q r = a(i, j) / b(i, j);
      if (!ratio) ratio = r;
      else if (!(*ratio == r)) return false;
    }
  return ratio.has_value();
}

bool pairwise_distinct(const std::vector<Q>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

std::vector<Q> row_sums(const QMatrix& m) {
  std::vector<Q> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Q acc = m(i, 0);
    for (std::size_t j = 1; j < m.cols(); ++j) acc += m(i, j);
    out.push_back(acc);
  }
  return out;
}

bool all_equal_to(const std::vector<Q>& v, const Q& x) {
  return std::ranges::all_of(v, [&](const Q& y) { return y == x; });
}

std::vector<Q> shifted(const std::vector<Q>& v, const mpq_class& by) {
  std::vector<Q> out;
  for (const auto& x : v) out.push_back(x + by);
  return out;
}

std::vector<QParam> as_params(const std::vector<Q>& v) { return {v.begin(), v.end()}; }

void add(std::vector<ConsistencyCheck>& checks, std::string name, bool holds, std::string note = {}) {
  checks.push_back({std::move(name), holds, std::move(note), false});
}

void compare(std::vector<ConsistencyCheck>& checks, std::string name, bool holds, std::string note = {}) {
  checks.push_back({std::move(name), holds, std::move(note), true});
}

/// Compares frame weights against the closed form; they agree up to (-1)^k.
void check_frame_weights(std::vector<ConsistencyCheck>& checks, const std::string& label, const QMatrix& frame,
                         const std::vector<Q>& params) {
  const NumberField f = params.front().field();
  const auto closed = frame_weights_closed_form(params);
  const std::size_t k = params.size() - 1;
  bool exact = true, signed_match = true;
  const mpq_class sign = k % 2 == 0 ? 1 : -1;
  for (std::size_t j = 0; j <= k; ++j) {
    const Q& weight = frame(0, j);  // first coordinate of γ is 1
    if (!(weight == closed[j])) exact = false;
    if (!(weight == closed[j] * sign)) signed_match = false;
  }
  compare(checks, label + " weights match 1/((sum t) prod (t_j - t_i))", exact,
          exact ? "" : "differs by the sign (-1)^k");
  add(checks, label + " weights match (-1)^k/((sum t) prod (t_j - t_i))", signed_match);
}

}  // namespace

ExceptionalPairError::ExceptionalPairError(Family family, int k, int n)
    : ExceptionalPair("(" + std::to_string(k) + "," + std::to_string(n) + ") is exceptional for family " +
                      std::string(to_string(family)) +
                      ": the characteristic polynomial is a product of cyclotomic factors, so the "
                      "multiplier would be a root of unity") {}

bool CoxeterConstruction::all_checks_hold() const {
  return std::ranges::all_of(checks, [](const ConsistencyCheck& c) { return c.comparison_only || c.holds; });
}

SalemField salem_field(Family family, int k, int n, long precision_bits) {
  auto report = spectra::classify_exceptional(family, k, n, precision_bits);
  if (report.exceptional || !report.delta) throw ExceptionalPairError(family, k, n);
  return {NumberField(report.split.core), report.full_poly, *report.delta};
}

std::vector<Q> tplus_pk(int k, int /*n*/, const Q& delta) {
  if (k < 2) throw InvalidInput("k must be at least 2");
  const NumberField f = delta.field();
  const Q one = f.one();
  const Q c = (delta * delta - one) / (delta * (delta.pow(k + 1) - one)) * frac(k + 1, k - 1);
  std::vector<Q> t;
  Q power = one;
  for (int j = 0; j <= k; ++j) {
    t.push_back(power * c - frac(2, k - 1));
    power *= delta;
  }
  return t;
}

Q tau_pk(int k, const Q& delta, const std::vector<Q>& t_plus) {
  return delta * sum(t_plus, delta.field().zero()) * frac(k - 1, k + 1);
}

std::vector<QParam> spoints_pk(int k, const Q& delta, const std::vector<Q>& t_plus, const Q& tau) {
  std::vector<QParam> out;
  const Q shift = tau * frac(2, k - 1);
  for (const auto& t : t_plus) out.emplace_back(delta * t - shift);
  return out;
}

geometry::LinearMap<Q> build_L_pk(int k, int /*n*/, const Q& delta) {
  const NumberField f = delta.field();
  std::vector<Q> beta;
  const Q top = delta.pow(k + 1);
  for (int i = 1; i <= k; ++i) {
    const Q di = delta.pow(i);
    beta.push_back((di - f.one()) / (delta * (top - di)));
  }
  return {f, shaped_matrix(f, k, f.one(), beta)};
}

BiprojParameters tplus_biproj(int k, int /*n*/, const Q& delta) {
  if (k < 2) throw InvalidInput("k must be at least 2");
  const NumberField f = delta.field();
  const Q one = f.one();
  // t_i^- = δ^i t_0^- + c (δ^i - 1)/(δ - 1), with Σ t^- = -(k+1)δ fixing t_0^-.
  auto solve = [&](const Q& c) {
    Q powers = f.zero(), geometric = f.zero();
    for (int i = 0; i <= k; ++i) {
      powers += delta.pow(i);
      geometric += (delta.pow(i) - one) / (delta - one);
    }
    const Q t0 = (-(delta * mpq_class(k + 1)) - c * geometric) / powers;
    std::vector<Q> minus;
    for (int i = 0; i <= k; ++i) minus.push_back(delta.pow(i) * t0 + c * ((delta.pow(i) - one) / (delta - one)));
    return minus;
  };
  auto plus_from_minus = [&](const std::vector<Q>& minus) {
    std::vector<Q> plus;
    for (const auto& t : minus) plus.push_back((t + mpq_class(1)) / delta + mpq_class(2));
    return plus;
  };
  BiprojParameters p{.t_plus = {}, .t_minus = solve(-(delta * mpq_class(2)) - one),
                     .tau = delta * mpq_class(k - 1) + mpq_class(k),
                     .alt_recurrence_t_plus = {}, .alt_closed_t_plus = {}};
  p.t_plus = plus_from_minus(p.t_minus);
  p.alt_recurrence_t_plus = plus_from_minus(solve(f.from_int(k) - delta * mpq_class(2)));
  const Q bracket = f.from_int(k * (k + 1)) - delta * (delta + one);
  const Q constant = (f.from_int(k + 1) - delta * delta * mpq_class(2) - delta) / (delta * (delta - one));
  for (int j = 0; j <= k; ++j)
    p.alt_closed_t_plus.push_back(delta.pow(j - 1) / (delta.pow(k + 1) - one) * bracket - constant);
  return p;
}

Q alternative_s2(const Q& delta) { return (delta * delta + delta + mpq_class(1)) / delta; }

std::pair<geometry::LinearMap<Q>, geometry::LinearMap<Q>> build_L_biproj(int k, int /*n*/, const Q& delta) {
  const NumberField f = delta.field();
  std::vector<Q> beta;
  const Q top = delta.pow(k + 1);
  for (int j = 1; j <= k; ++j) {
    const Q dj = delta.pow(j);
    beta.push_back((dj - f.one()) * (delta + mpq_class(1)) / (delta * delta * (top - dj)));
  }
  const Q s2 = (delta + mpq_class(1)) * (delta + mpq_class(1)) / delta;
  return {LinearMap<Q>(f, shaped_matrix(f, k, f.one(), beta)), LinearMap<Q>(f, shaped_matrix(f, k, s2, beta))};
}

std::vector<geometry::LinearMap<Q>> build_L_lines(int k, int m, int /*n*/, const Q& alpha) {
  if (k < 2 || m < 1) throw InvalidInput("lines family needs k >= 2 and m >= 1");
  const NumberField f = alpha.field();
  if (spectra::strip_cyclotomic(f.modulus()).core_is_constant())
    throw ExceptionalPair("alpha is a root of unity; the lines construction degenerates");
  const Q one = f.one();
  const Q am = alpha.pow(m) - one;
  const Q v = -(alpha * am / (alpha - one));
  std::vector<geometry::LinearMap<Q>> out;
  for (int j = 0; j < m; ++j) {
    const Q s = am * (alpha.pow(j + 1) - one) / (alpha.pow(j) * (alpha - one) * (alpha.pow(m - j) - one));
    out.emplace_back(f, shaped_matrix(f, k, s, std::vector<Q>(static_cast<std::size_t>(k), v)));
  }
  return out;
}

std::vector<Q> frame_weights_closed_form(const std::vector<Q>& params) {
  const Q total = sum(params, params.front().field().zero());
  std::vector<Q> out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    Q denom = total;
    for (std::size_t j = 0; j < params.size(); ++j)
      if (j != i) denom *= params[j] - params[i];
    out.push_back(nf_invert(denom));
  }
  return out;
}

namespace {

CoxeterConstruction construct_pk(int k, int n, long precision_bits) {
  SalemField sf = salem_field(Family::pk, k, n, precision_bits);
  const NumberField& f = sf.field;
  const Q delta = f.generator();
  const Q one = f.one();
  auto t_plus = tplus_pk(k, n, delta);
  const Q tau = tau_pk(k, delta, t_plus);
  auto s_params = spoints_pk(k, delta, t_plus, tau);
  auto L = build_L_pk(k, n, delta).matrix();

  std::vector<ConsistencyCheck> checks;
  add(checks, "tau = 1 - delta", tau == one - delta);
  bool chain = true;
  for (int j = 0; j < k; ++j) chain = chain && s_params[static_cast<std::size_t>(j)].value() == t_plus[static_cast<std::size_t>(j + 1)];
  add(checks, "S(e_j) = T(e_{j+1}) on parameters", chain);
  add(checks, "delta^(n-1) (s_k - 1) + 1 = t_0^+",
      delta.pow(n - 1) * (s_params.back().value() - one) + one == t_plus.front());
  bool ratio = true;
  const Q offset0 = t_plus.front() + frac(2, k - 1);
  for (int j = 0; j <= k; ++j)
    ratio = ratio && (t_plus[static_cast<std::size_t>(j)] + frac(2, k - 1)) == offset0 * delta.pow(j);
  add(checks, "(t_j^+ + 2/(k-1)) / (t_0^+ + 2/(k-1)) = delta^j", ratio);
  add(checks, "sum (t_j^+ + 2/(k-1)) = (k+1)/(k-1) (1/delta + 1)",
      sum(shifted(t_plus, frac(2, k - 1)), f.zero()) == (nf_invert(delta) + one) * frac(k + 1, k - 1));
  add(checks, "t_j^+ pairwise distinct", pairwise_distinct(t_plus));
  add(checks, "sum t_j^+ nonzero", !sum(t_plus, f.zero()).is_zero());
  add(checks, "det L nonzero", !geometry::determinant(f, L).is_zero());
  add(checks, "L (1,...,1) = (1,...,1)", all_equal_to(row_sums(L), one));

  auto T = curve_frame(f, t_plus, static_cast<std::size_t>(k));
  std::vector<Q> s_values;
  for (const auto& s : s_params) s_values.push_back(s.value());
  auto S = curve_frame(f, s_values, static_cast<std::size_t>(k));
  add(checks, "closed-form L equals T^-1 S", matrices_equal(geometry::inverse(f, T) * S, L));
  check_frame_weights(checks, "T", T, t_plus);

  MapData<Q> map{.family = Family::pk, .k = k, .n = n, .m = 1, .delta = delta, .tau = tau,
                 .t_plus = std::move(t_plus), .s_params = std::move(s_params), .L = {std::move(L)},
                 .frames = {std::move(T)}, .law_multiplier = delta, .law_shift = one - delta};
  return {.map = std::move(map), .field = f, .full_poly = std::move(sf.full_poly), .root = std::move(sf.root),
          .t_minus = {}, .lines = std::nullopt, .checks = std::move(checks)};
}

CoxeterConstruction construct_biproj(int k, int n, long precision_bits) {
  SalemField sf = salem_field(Family::biproj, k, n, precision_bits);
  const NumberField& f = sf.field;
  const Q delta = f.generator();
  const Q one = f.one();
  auto params = tplus_biproj(k, n, delta);
  auto [map1, map2] = build_L_biproj(k, n, delta);
  QMatrix L1 = map1.matrix(), L2 = map2.matrix();
  const auto kk = static_cast<std::size_t>(k);

  std::vector<ConsistencyCheck> checks;
  add(checks, "sum t_j^+ = (k+1)(1/delta + 1)",
      sum(params.t_plus, f.zero()) == (nf_invert(delta) + one) * mpq_class(k + 1));
  add(checks, "sum t_j^- = -(k+1) delta", sum(params.t_minus, f.zero()) == -(delta * mpq_class(k + 1)));
  bool minus_rel = true, chain = true;
  for (std::size_t j = 0; j <= kk; ++j)
    minus_rel = minus_rel && params.t_minus[j] == delta * (params.t_plus[j] - mpq_class(2)) - one;
  for (std::size_t j = 0; j < kk; ++j) chain = chain && params.t_minus[j] == params.t_plus[j + 1];
  add(checks, "t_j^- = delta (t_j^+ - 2) - 1", minus_rel);
  add(checks, "S(e_j,e_j) = T(e_{j+1},e_{j+1}) on parameters", chain);
  Q endpoint = params.t_minus.back();
  for (int i = 0; i + 1 < n; ++i) endpoint = delta * endpoint + params.tau;
  add(checks, "F^(n-1) orbit parameter lands on t_0^+", endpoint == params.t_plus.front());
  compare(checks, "recurrence with constant (k - 2 delta) reproduces t^+",
      params.alt_recurrence_t_plus == params.t_plus, "the constant -(2 delta + 1) is forced by t_{j+1}^+ = t_j^-");
  compare(checks, "alternative closed form for t_j^+ reproduces t^+", params.alt_closed_t_plus == params.t_plus,
      "closed form evaluated and compared only");
  add(checks, "t_j^+ pairwise distinct", pairwise_distinct(params.t_plus));
  add(checks, "det L_1, det L_2 nonzero",
      !geometry::determinant(f, L1).is_zero() && !geometry::determinant(f, L2).is_zero());
  add(checks, "L_1 row sums = 1", all_equal_to(row_sums(L1), one));
  const Q s2 = (delta + mpq_class(1)) * (delta + mpq_class(1)) / delta;
  add(checks, "L_2 row sums = s_2 = (delta+1)^2/delta", all_equal_to(row_sums(L2), s2));

  auto T1 = curve_frame(f, params.t_plus, kk);
  auto T2 = curve_frame(f, shifted(params.t_plus, -1), kk);
  auto S1 = curve_frame(f, params.t_minus, kk);
  auto S2 = curve_frame(f, shifted(params.t_minus, -1), kk);
  const QMatrix derived1 = geometry::inverse(f, T1) * S1;
  const QMatrix derived2 = geometry::inverse(f, T2) * S2;
  add(checks, "closed-form L_1 equals T_1^-1 S_1", matrices_equal(derived1, L1));
  QMatrix scaled2 = derived2;
  for (std::size_t i = 0; i <= kk; ++i)
    for (std::size_t j = 0; j <= kk; ++j) scaled2(i, j) *= s2;
  add(checks, "closed-form L_2 equals s_2 T_2^-1 S_2", matrices_equal(scaled2, L2));
  std::vector<Q> beta;
  for (std::size_t i = 1; i <= kk; ++i) beta.push_back(L2(i, i - 1));
  compare(checks, "scale (delta^2+delta+1)/delta gives a multiple of T_2^-1 S_2",
      matrices_proportional(shaped_matrix(f, k, alternative_s2(delta), beta), derived2),
      "the corrected scale (delta+1)^2/delta is used");

  std::vector<QParam> s_params = as_params(params.t_minus);
  MapData<Q> map{.family = Family::biproj, .k = k, .n = n, .m = 2, .delta = delta, .tau = params.tau,
                 .t_plus = params.t_plus, .s_params = std::move(s_params), .L = {std::move(L1), std::move(L2)},
                 .frames = {std::move(T1), std::move(T2)}, .law_multiplier = delta, .law_shift = params.tau};
  return {.map = std::move(map), .field = f, .full_poly = std::move(sf.full_poly), .root = std::move(sf.root),
          .t_minus = std::move(params.t_minus), .lines = std::nullopt, .checks = std::move(checks)};
}

}  // namespace

CoxeterConstruction construct(Family family, int k, int n, long precision_bits) {
  switch (family) {
    case Family::pk: return construct_pk(k, n, precision_bits);
    case Family::biproj: return construct_biproj(k, n, precision_bits);
    case Family::lines: break;
  }
  throw InvalidInput("use construct_lines for the lines family");
}

CoxeterConstruction construct_lines(int k, int m, int n, long precision_bits) {
  if (k < 2 || m < 1 || n < 1) throw InvalidInput("lines family needs k >= 2, m >= 1, n >= 1");
  const int arm = n * (k + 1);
  const auto coxeter = picard::coxeter_element_tpqr(m + 1, k + 1, arm);
  auto split = spectra::strip_cyclotomic(coxeter.char_poly);
  if (split.core_is_constant())
    throw ExceptionalPair("T(" + std::to_string(m + 1) + "," + std::to_string(k + 1) + "," + std::to_string(arm) +
                          ") is not hyperbolic: its Coxeter element has spectral radius 1");
  auto root = spectra::leading_salem_root(split.core, precision_bits);
  if (!root) throw ExceptionalPair("Coxeter polynomial has no real root above one");
  const NumberField f(split.core);
  const Q alpha = f.generator();
  auto maps = build_L_lines(k, m, n, alpha);

  const Q one = f.one();
  const Q v = -(alpha * (alpha.pow(m) - one) / (alpha - one));
  std::vector<Q> scales;
  std::vector<QMatrix> L;
  for (const auto& map : maps) {
    scales.push_back(map.matrix()(0, static_cast<std::size_t>(k)));
    L.push_back(map.matrix());
  }
  std::vector<ConsistencyCheck> checks;
  add(checks, "s_0 = 1", scales.front() == one);
  bool sums = true;
  for (std::size_t j = 0; j < L.size(); ++j) sums = sums && all_equal_to(row_sums(L[j]), scales[j]);
  add(checks, "L_j row sums = s_j", sums);

  MapData<Q> map{.family = Family::lines, .k = k, .n = n, .m = m, .delta = alpha, .tau = f.zero(),
                 .t_plus = {}, .s_params = {}, .L = std::move(L), .frames = {},
                 .law_multiplier = nf_invert(alpha), .law_shift = f.zero()};
  LinesData lines{.shift = v, .scale = std::move(scales), .orbit_length = arm + 1};
  return {.map = std::move(map), .field = f, .full_poly = coxeter.char_poly, .root = std::move(*root),
          .t_minus = {}, .lines = std::move(lines), .checks = std::move(checks)};
}

MapData<Q> build_basic_map(const NumberField& f, const Q& delta, const std::vector<Q>& t_plus) {
  if (t_plus.size() < 3) throw InvalidInput("need k+1 >= 3 parameters");
  if (!pairwise_distinct(t_plus)) throw InvalidInput("parameters must be distinct");
  if (sum(t_plus, f.zero()).is_zero()) throw InvalidInput("parameters must not sum to zero");
  const int k = static_cast<int>(t_plus.size()) - 1;
  const Q tau = tau_pk(k, delta, t_plus);
  auto s_params = spoints_pk(k, delta, t_plus, tau);
  std::vector<Q> s_values;
  for (const auto& s : s_params) s_values.push_back(s.value());
  auto T = curve_frame(f, t_plus, static_cast<std::size_t>(k));
  auto S = curve_frame(f, s_values, static_cast<std::size_t>(k));
  QMatrix L = geometry::inverse(f, T) * S;
  return {.family = Family::pk, .k = k, .n = 0, .m = 1, .delta = delta, .tau = tau, .t_plus = t_plus,
          .s_params = std::move(s_params), .L = {std::move(L)}, .frames = {std::move(T)},
          .law_multiplier = delta, .law_shift = tau};
}

MapData<arith::BigFloat> embed(const MapData<Q>& d, const arith::RealEmbedding& e) {
  using arith::BigFloat;
  auto conv = [&](const Q& q) { return e(q); };
  auto conv_all = [&](const std::vector<Q>& v) {
    std::vector<BigFloat> out;
    for (const auto& q : v) out.push_back(e(q));
    return out;
  };
  std::vector<geometry::CurveParam<BigFloat>> s_params;
  for (const auto& s : d.s_params)
    s_params.push_back(s.is_infinity() ? geometry::CurveParam<BigFloat>::infinity()
                                       : geometry::CurveParam<BigFloat>(e(s.value())));
  std::vector<geometry::Matrix<BigFloat>> L, frames;
  for (const auto& m : d.L) L.push_back(m.map(conv));
  for (const auto& m : d.frames) frames.push_back(m.map(conv));
  return {.family = d.family, .k = d.k, .n = d.n, .m = d.m, .delta = e(d.delta), .tau = e(d.tau),
          .t_plus = conv_all(d.t_plus), .s_params = std::move(s_params), .L = std::move(L),
          .frames = std::move(frames), .law_multiplier = e(d.law_multiplier), .law_shift = e(d.law_shift)};
}

arith::RealEmbedding real_embedding(const CoxeterConstruction& c, long precision_bits) {
  auto root = spectra::leading_salem_root(c.field.modulus(), precision_bits);
  if (!root) throw arith::InconsistentEmbedding("modulus has no real root above one");
  const mpq_class mid = (root->lower + root->upper) / 2;
  const mpq_class radius = (root->upper - root->lower) / 2;
  return arith::RealEmbedding(c.field, arith::BigFloat(mid, precision_bits), arith::BigFloat(radius, precision_bits));
}

}  // namespace cremona::construct

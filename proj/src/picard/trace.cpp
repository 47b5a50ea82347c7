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

#include "cremona/picard/trace.hpp"

#include "cremona/spectra/cyclotomic.hpp"

namespace cremona::picard {

using construct::Q;

namespace {

IntVector apply(const IntMatrix& m, const IntVector& v) { return m * v; }

mpz_class curve_degree(const PicardLattice& lattice, const IntVector& d) {
  const auto degrees = lattice.curve_degrees();
  mpz_class sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) sum += degrees[i] * d[i];
  return sum;
}

bool divides(const arith::IntegerPolynomial& factor, const arith::IntegerPolynomial& p) {
  return arith::exact_quotient(p, factor).has_value();
}

}  // namespace

bool TraceReport::passed() const {
  return canonical_invariant && canonical_trace_preserved && salem_divides_pullback && salem_divides_coxeter &&
         !samples.empty() &&
         std::ranges::all_of(samples, [](const TraceSample& s) { return s.pushforward_scales && s.pullback_scales; });
}

Q trace_of(const IntVector& divisor_class, const std::vector<Q>& point_params, const construct::NumberField& field) {
  if (divisor_class.size() != point_params.size() + 1) throw InvalidInput("class does not match the lattice rank");
  Q sum = field.zero();
  for (std::size_t e = 0; e < point_params.size(); ++e)
    if (divisor_class[e + 1] != 0) sum += point_params[e] * mpq_class(divisor_class[e + 1]);
  return sum;
}

std::vector<Q> exceptional_params(const construct::CoxeterConstruction& c, const PicardLattice& lattice) {
  const auto& d = c.map;
  const int k = d.k;
  std::vector<Q> params;
  for (std::size_t e = 0; e + lattice.offset() < lattice.rank(); ++e) {
    const auto [i, j] = lattice.exceptional(e);
    if (i < k) {
      if (j != 1) throw InvalidInput("trace parameters need orbit data (1, ..., 1, n)");
      params.push_back(d.t_plus.at(static_cast<std::size_t>(i + 1)));
    } else {
      // E_{k,j} sits j-1 steps before T(e_0) along the long orbit; the law fixes t = 1.
      const Q one = c.field.one();
      params.push_back((d.t_plus.front() - one) * d.delta.pow(1 - j) + one);
    }
  }
  return params;
}

std::vector<std::pair<std::string, IntVector>> default_trace_samples(const PicardLattice& lattice) {
  const int k = lattice.k();
  const int n = lattice.orbits().lengths.back();
  std::vector<std::pair<std::string, IntVector>> out;
  auto blank = [&] { return IntVector(lattice.rank(), 0); };

  IntVector a = blank();
  a[0] = -1;
  a[lattice.index_of(0, 1)] = k + 1;
  out.emplace_back("(k+1)E_{0,1} - H", std::move(a));

  IntVector b = blank();
  b[lattice.index_of(k, 1)] += 1;
  b[lattice.index_of(0, 1)] -= 1;
  out.emplace_back("E_{k,1} - E_{0,1}", std::move(b));

  IntVector c = blank();
  c[lattice.index_of(k, n)] += 1;
  c[lattice.index_of(1, 1)] -= 1;
  out.emplace_back("E_{k,n} - E_{1,1}", std::move(c));
  return out;
}

TraceReport trace_compatibility(const construct::CoxeterConstruction& c,
                                const verify::OrbitCheckReport<Q>& orbit,
                                const std::vector<std::pair<std::string, IntVector>>& samples) {
  if (c.map.family != Family::pk) throw InvalidInput("trace compatibility is implemented for the pk family");
  if (!orbit.passed() || !c.all_checks_hold() || orbit.k != c.map.k || orbit.n != c.map.n)
    throw UnverifiedConstruction();
  const int k = c.map.k;
  const int n = c.map.n;
  const PicardLattice lattice(k, OrbitData::coxeter(k, n));
  const IntMatrix pullback = geometric_pullback(lattice);
  const IntMatrix pushforward = integer_inverse(pullback);

  TraceReport r;
  r.point_params = exceptional_params(c, lattice);
  const auto& field = c.field;
  const Q& delta = c.map.delta;

  for (const auto& [label, cls] : samples) {
    if (cls.size() != lattice.rank()) throw InvalidInput("sample class '" + label + "' has the wrong rank");
    if (curve_degree(lattice, cls) != 0) throw InvalidInput("sample class '" + label + "' is not orthogonal to the curve");
    TraceSample s{label, cls, trace_of(cls, r.point_params, field),
                  trace_of(apply(pushforward, cls), r.point_params, field),
                  trace_of(apply(pullback, cls), r.point_params, field)};
    s.pushforward_scales = s.pushed_trace == delta * s.trace;
    s.pullback_scales = s.pulled_trace * delta == s.trace;
    r.samples.push_back(std::move(s));
  }

  const IntVector canonical = lattice.canonical();
  r.canonical_invariant = apply(pullback, canonical) == canonical;
  r.canonical_trace_preserved =
      trace_of(apply(pushforward, canonical), r.point_params, field) == trace_of(canonical, r.point_params, field);

  const auto& salem = field.modulus();
  r.salem_divides_pullback = divides(salem, characteristic_polynomial(pullback));
  r.salem_divides_coxeter = divides(salem, characteristic_polynomial(coxeter_action(lattice)));
  return r;
}

TraceReport trace_compatibility(const construct::CoxeterConstruction& c,
                                const verify::OrbitCheckReport<Q>& orbit) {
  const PicardLattice lattice(c.map.k, OrbitData::coxeter(c.map.k, c.map.n));
  return trace_compatibility(c, orbit, default_trace_samples(lattice));
}

}  // namespace cremona::picard

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

// Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion; exit status 1 if any fail.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>

#include "cremona/arith/rational_field.hpp"
#include "cremona/geometry/projective.hpp"
#include "cremona/picard/coxeter.hpp"
#include "cremona/picard/trace.hpp"
#include "cremona/spectra/cyclotomic.hpp"
#include "cremona/verify/verify.hpp"
#include "oracle_values.hpp"

using namespace cremona;
using arith::BigFloat;
using arith::IntegerPolynomial;

namespace {

// Pinned tolerances.
constexpr double kSalemMargin = 1e-9;        // criterion 1: δ > 1 + margin
constexpr double kFiveDigitTol = 5e-5;     // criterion 2: agreement with 5-digit values
constexpr double kSpectralTol = 1e-10;       // criterion 7: radius vs isolated root
constexpr double kCriterion1Seconds = 10.0;
constexpr double kCriterion2Seconds = 1.0;
constexpr double kOrbitSecondsPerCase = 60.0;
constexpr int kCurveSamples = 20;
constexpr int kInvolutionSamples = 500;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " failed: " << what << ";";
    }
  }
  void note(const std::string& what) { detail << " " << what << ";"; }
};

const std::vector<std::pair<int, int>> kOrbitCases{{2, 8}, {2, 9}, {3, 6}, {4, 5}};

std::map<std::pair<int, int>, construct::CoxeterConstruction>& constructions() {
  static std::map<std::pair<int, int>, construct::CoxeterConstruction> cache;
  return cache;
}

const construct::CoxeterConstruction& pk(int k, int n) {
  auto& cache = constructions();
  auto it = cache.find({k, n});
  if (it == cache.end()) it = cache.emplace(std::pair{k, n}, construct::construct(Family::pk, k, n)).first;
  return it->second;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cli_exit(const std::string& args) {
  const std::string cmd = std::string(CREMONA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  int listed = 0;
  std::vector<std::string> unlisted;
  for (int k = 2; k <= 6; ++k)
    for (int n = 1; n <= 9; ++n) {
      const auto r = spectra::classify_exceptional(Family::pk, k, n, 128);
      if (r.listed) {
        ++listed;
        o.require(r.exceptional, "listed pair (" + std::to_string(k) + "," + std::to_string(n) + ") has a Salem factor");
      } else if (r.exceptional) {
        unlisted.push_back("(" + std::to_string(k) + "," + std::to_string(n) + ")");
      }
    }
  for (auto [k, n] : {std::pair{2, 8}, {3, 6}, {4, 5}, {5, 5}}) {
    const auto r = spectra::classify_exceptional(Family::pk, k, n, 128);
    o.require(r.delta && r.delta->midpoint > BigFloat(1, 128) + BigFloat(mpq_class(1, 1000000000), 128),
              "root above one for (" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  std::string extra = unlisted.empty() ? "none" : "";
  for (const auto& s : unlisted) extra += s + " ";
  o.note(std::to_string(listed) + " listed pairs confirmed cyclotomic");
  o.note("computed-exceptional pairs outside the list: " + extra);
  const double dt = seconds_since(t0);
  o.require(dt < kCriterion1Seconds, "runtime");
  o.note("runtime " + std::to_string(dt) + " s");
}

void criterion2(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::tuple<int, int, double>> cases{{2, 5, 1.40127}, {3, 4, 1.40127}, {6, 3, 1.17628}};
  for (auto [k, n, expected] : cases) {
    const auto r = spectra::classify_exceptional(Family::biproj, k, n, 128);
    const double got = r.delta ? r.delta->midpoint.to_double() : 0.0;
    o.require(std::abs(got - expected) < kFiveDigitTol, "biproj (" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  const double dt = seconds_since(t0);
  o.require(dt < kCriterion2Seconds, "runtime");
  o.note("runtime " + std::to_string(dt) + " s");
}

void criterion3(Outcome& o) {
  const IntegerPolynomial xm1{-1, 1}, xp1{1, 1};
  int alternative_mismatch = 0;
  for (int k = 2; k <= 8; ++k) {
    o.require(spectra::char_poly_biproj(k, 1) == IntegerPolynomial::x_pow_minus_one(k + 1) * IntegerPolynomial{1, 1, 1},
              "biproj n=1 factorization at k=" + std::to_string(k));
    o.require(spectra::char_poly_biproj(k, 2) == IntegerPolynomial::x_pow_minus_one(k + 4),
              "biproj n=2 factorization at k=" + std::to_string(k));
    for (int n : {2, 3}) {
      const auto p = spectra::char_poly_pk(k, n);
      o.require(spectra::strip_cyclotomic(p).core_is_constant(), "pk n=" + std::to_string(n) + " constant core");
    }
    const auto q2 = arith::exact_quotient(spectra::char_poly_pk(k, 2), xm1 * IntegerPolynomial::x_pow_minus_one(k + 3));
    o.require(q2 && (*q2 == IntegerPolynomial{1}), "pk n=2 equals (x-1)(x^{k+3}-1)");
    const IntegerPolynomial third = xm1 * xm1 * xp1 * (IntegerPolynomial::x_pow_minus_one(k + 2) + IntegerPolynomial{2});
    const auto q3 = arith::exact_quotient(spectra::char_poly_pk(k, 3), third);
    o.require(q3 && (*q3 == IntegerPolynomial{1}), "pk n=3 equals (x-1)^2(x+1)(x^{k+2}+1)");
    for (int n : {2, 3})
      for (const auto& cf : spectra::classify_exceptional(Family::pk, k, n, 64).closed_forms)
        if (!cf.holds) ++alternative_mismatch;
  }
  o.note(std::to_string(alternative_mismatch) + " alternative pk closed forms differ by one in an exponent (reported, not asserted)");
}

void criterion4(Outcome& o) {
  for (auto [k, n] : kOrbitCases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& c = pk(k, n);
    const auto r = verify::verify_orbit(c.field, c.map);
    const std::string tag = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
    for (const auto& cond : r.conditions) {
      o.require(cond.passed, tag + " " + cond.name);
      o.require(cond.residual == 0.0, tag + " nonzero residual");
    }
    bool oracle = r.orbit.size() == static_cast<std::size_t>(n);
    for (const auto& s : r.orbit) oracle = oracle && s.param && s.oracle && !s.param->is_infinity() && s.param->value() == s.oracle->value();
    o.require(oracle, tag + " affine oracle");
    const double dt = seconds_since(t0);
    o.require(dt < kOrbitSecondsPerCase, tag + " runtime");
    o.note(tag + " " + std::to_string(dt) + " s");
  }
}

void criterion5(Outcome& o) {
  for (auto [k, n] : kOrbitCases) {
    const auto& c = pk(k, n);
    o.require(c.map.law_multiplier == c.map.delta && c.map.law_shift == c.field.one() - c.map.delta,
              "pk law is t -> delta (t - 1) + 1");
    const auto r = verify::verify_curve_invariance(c.field, c.map, kCurveSamples, 1);
    o.require(r.passed() && r.samples.size() == kCurveSamples, "pk curve invariance");
  }
  const auto b = construct::construct(Family::biproj, 2, 5);
  const auto& d = b.map.delta;
  o.require(b.map.law_multiplier == d && b.map.law_shift == d * mpq_class(1) + mpq_class(2), "biproj law is t -> delta t + k + (k-1) delta");
  const auto r = verify::verify_curve_invariance(b.field, b.map, kCurveSamples, 1);
  o.require(r.passed() && r.samples.size() == kCurveSamples, "biproj curve invariance");
}

void criterion6(Outcome& o) {
  for (auto [k, n] : kOrbitCases) {
    const auto& c = pk(k, n);
    const auto r = verify::verify_distinctness(c.field, c.map);
    o.require(r.distinct && r.params.size() == static_cast<std::size_t>(k + n), "distinct parameters");
  }
}

void criterion7(Outcome& o) {
  using picard::operator==;
  std::string signs;
  for (auto [k, n] : kOrbitCases) {
    const picard::PicardLattice lat(k, picard::OrbitData::coxeter(k, n));
    const auto m = picard::coxeter_action(lat);
    const auto g = lat.gram();
    o.require(picard::transpose(m) * g * m == g, "form preservation");
    const auto spectrum = spectra::classify_exceptional(Family::pk, k, n, 256);
    const auto cp = IntegerPolynomial{-1, 1} * picard::characteristic_polynomial(m);
    const bool plus = cp == spectrum.full_poly, minus = cp == -spectrum.full_poly;
    o.require(plus || minus, "characteristic polynomial");
    signs += plus ? "+" : "-";
    const auto root = picard::spectral_root(m, 256);
    o.require(root && std::abs((root->midpoint - spectrum.delta->midpoint).to_double()) < kSpectralTol, "spectral radius");
    if (k == 2 && n == 8)
      o.require(root && std::abs((root->midpoint - BigFloat(std::string(oracle::kLehmer), 256)).to_double()) < kSpectralTol,
                "Lehmer's number");
  }
  o.note("signs of (x-1) charpoly vs family polynomial: " + signs);
}

void criterion8(Outcome& o) {
  auto pair = [](int k, int total) { return picard::canonical_pairings(k, picard::OrbitData::coxeter(k, total - k)); };
  for (auto [k, total] : {std::pair{2, 9}, {3, 8}, {5, 9}}) o.require(pair(k, total).self_gram == 0, "<K,K> = 0");
  for (auto [k, total] : {std::pair{2, 9}, {3, 8}}) o.require(pair(k, total).curve_degrees == 0, "K.C = 0");
}

void criterion9(Outcome& o) {
  for (auto [k, n] : {std::pair{2, 8}, {3, 6}}) {
    const auto& c = pk(k, n);
    const auto orbit = verify::verify_orbit(c.field, c.map);
    const auto r = picard::trace_compatibility(c, orbit);
    o.require(r.samples.size() == 3, "three sample classes");
    for (const auto& s : r.samples) o.require(s.pushforward_scales, s.label);
    o.require(r.passed(), "trace report");
  }
}

void criterion10(Outcome& o) {
  const auto& c = pk(2, 8);
  const auto bad = verify::verify_orbit(c.field, verify::perturb_beta(c.map, 1, mpq_class(1, 1000)));
  o.require(!bad.conditions.at(1).passed, "perturbed beta fails condition (b)");
  o.require(cli_exit("construct --family pk -k 2 -n 7") == 3, "exceptional construct exits 3");
  o.require(cli_exit("verify --family pk -k 3 -n 5") == 3, "exceptional verify exits 3");
  o.require(cli_exit("verify --family pk -k 2 -n 8 --perturb 1/1000") == 4, "perturbed verify exits 4");
  const auto tc = verify::translation_control(2);
  const auto r = verify::verify_curve_invariance(tc.field, tc.map, 5, 1);
  o.require(r.translation_guard && !r.passed(), "multiplier-one guard");
}

void criterion11(Outcome& o) {
  const arith::RationalField q;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 13);
  auto nonzero = [&] {
    long a = 0;
    while (a == 0) a = num(rng);
    mpq_class v(a, den(rng));
    v.canonicalize();
    return v;
  };
  bool involution = true;
  for (int i = 0; i < kInvolutionSamples; ++i) {
    std::vector<mpq_class> c;
    for (int j = 0; j < 2 + i % 4; ++j) c.push_back(nonzero());
    const geometry::ProjectivePoint<mpq_class> p(q, c);
    involution = involution && geometry::projective_equal(q, geometry::apply_J(q, geometry::apply_J(q, p)), p);
  }
  o.require(involution, "J involution");

  const auto& field = pk(2, 8).field;
  bool axioms = true;
  for (int i = 0; i < 200; ++i) {
    std::vector<mpq_class> a, b;
    for (int j = 0; j < field.degree(); ++j) {
      a.push_back(nonzero());
      b.push_back(nonzero());
    }
    const auto x = field.element(arith::RationalPolynomial(a));
    const auto y = field.element(arith::RationalPolynomial(b));
    axioms = axioms && x * y == y * x && (x + y) - y == x && x * (field.one() / x) == field.one() &&
             x * (y + field.one()) == x * y + x;
  }
  o.require(axioms, "field axioms");

  bool recon = true, reciprocal = true;
  for (Family f : {Family::pk, Family::biproj})
    for (int k = 2; k <= 6; ++k)
      for (int n = 1; n <= 9; ++n) {
        const auto p = spectra::char_poly(f, k, n);
        const auto split = spectra::strip_cyclotomic(p);
        recon = recon && split.reconstruct() == p;
        if (!split.core_is_constant()) reciprocal = reciprocal && arith::is_reciprocal(split.core);
      }
  o.require(recon, "cyclotomic reconstruction");
  o.require(reciprocal, "Salem factor reciprocity");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"exceptional-set reproduction", criterion1},
      {"biprojective spectral values", criterion2},
      {"closed-form factorizations", criterion3},
      {"exact orbit closure", criterion4},
      {"curve invariance", criterion5},
      {"distinctness of blown-up points", criterion6},
      {"lattice cross-check", criterion7},
      {"canonical pairings", criterion8},
      {"trace compatibility", criterion9},
      {"negative controls", criterion10},
      {"property suites", criterion11}};
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << " exception: " << e.what() << ";";
    }
    if (!o.passed) ++failures;
    std::printf("criterion %2zu %s  %s [%.2f s]%s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), o.detail.str().c_str());
  }
  std::printf("acceptance: %zu of %zu criteria passed in %.1f s\n", criteria.size() - failures, criteria.size(),
              seconds_since(start));
  return failures == 0 ? 0 : 1;
}

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

#include <doctest.h>

#include "cremona/picard/coxeter.hpp"
#include "cremona/picard/lattice.hpp"
#include "cremona/picard/trace.hpp"
#include "cremona/spectra/cyclotomic.hpp"
#include "oracle_values.hpp"

using namespace cremona;
using namespace cremona::picard;
using arith::BigFloat;

namespace {

bool near(const BigFloat& x, const char* oracle, const char* tol = "1e-28") {
  return arith::abs(x - BigFloat(std::string(oracle), 256)) < BigFloat(std::string(tol), 256);
}

bool preserves(const IntMatrix& m, const IntMatrix& gram) { return transpose(m) * gram * m == gram; }

}  // namespace

TEST_CASE("lattice basis, Gram matrix and labels") {
  const PicardLattice lat(2, OrbitData::coxeter(2, 8));
  CHECK(lat.rank() == 11);
  const auto g = lat.gram();
  CHECK(g(0, 0) == 1);
  for (std::size_t i = 1; i < 11; ++i) CHECK(g(i, i) == -1);
  CHECK(lat.index_of(2, 2) == 4);  // E_{k,2} follows E_{0,1} .. E_{k,1}
  CHECK(lat.labels().size() == 11);
  CHECK_THROWS_AS(PicardLattice(2, OrbitData{{1, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(PicardLattice(2, OrbitData{{1, 1, 8}, {0, 0, 1}}), InvalidInput);
}

TEST_CASE("root Gram matrix is the T(2,3,9) diagram up to root signs") {
  const PicardLattice lat(2, OrbitData::coxeter(2, 8));
  const auto rg = lat.root_gram();
  REQUIRE(rg.rows() == 10);
  int edges = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(rg(i, i) == -2);
    for (std::size_t j = i + 1; j < 10; ++j) {
      CHECK(abs(rg(i, j)) <= 1);
      if (rg(i, j) != 0) ++edges;
    }
  }
  CHECK(edges == 9);                  // a tree on ten nodes
  CHECK(abs(rg(0, 3)) == 1);          // α_0 meets α_{k+1}
  CHECK(rg(0, 1) == 0);               // α_0 is orthogonal to α_1
  CHECK(rg(0, 3) == -1);              // literal pairing with α_{k+1} = E_{k,2} - E_{k,1}
}

TEST_CASE("reflections are involutive isometries") {
  const PicardLattice lat(3, OrbitData::coxeter(3, 6));
  const auto g = lat.gram();
  for (const auto& a : lat.roots()) {
    const auto s = reflection(a, g);
    CHECK(s * s == int_identity(lat.rank()));
    CHECK(preserves(s, g));
    IntVector neg = a;
    for (auto& v : neg) v = -v;
    CHECK(s * a == neg);
  }
  const IntVector not_root(lat.rank(), 0);
  CHECK_THROWS_AS(reflection(not_root, g), InvalidInput);
}

TEST_CASE("the first reflection acts on H as the quadratic Cremona pullback") {
  const PicardLattice lat(2, OrbitData::coxeter(2, 8));
  const auto s0 = reflection(lat.roots().front(), lat.gram());
  IntVector h(lat.rank(), 0);
  h[0] = 1;
  const auto image = s0 * h;
  CHECK(image[0] == 2);
  for (int i = 0; i <= 2; ++i) CHECK(image[lat.index_of(i, 1)] == -1);
}

TEST_CASE("Coxeter action: form, canonical class and characteristic polynomial") {
  for (int k = 2; k <= 5; ++k)
    for (int n = 1; n <= 8; ++n) {
      const auto spectrum = spectra::classify_exceptional(Family::pk, k, n, 128);
      if (spectrum.exceptional) continue;
      const PicardLattice lat(k, OrbitData::coxeter(k, n));
      const auto m = coxeter_action(lat);
      CHECK(preserves(m, lat.gram()));
      CHECK(m * lat.canonical() == lat.canonical());
      const auto cp = arith::IntegerPolynomial{-1, 1} * characteristic_polynomial(m);
      CHECK((cp == spectrum.full_poly || cp == -spectrum.full_poly));
      const auto root = spectral_root(m, 128);
      REQUIRE(root.has_value());
      CHECK(arith::abs(root->midpoint - spectrum.delta->midpoint) < BigFloat("1e-10", 128));
    }
}

TEST_CASE("geometric pullback matches the Coxeter decomposition spectrally") {
  const PicardLattice lat(2, OrbitData::coxeter(2, 8));
  const auto pull = geometric_pullback(lat);
  CHECK(preserves(pull, lat.gram()));
  CHECK(characteristic_polynomial(pull) == characteristic_polynomial(coxeter_action(lat)));
  CHECK(pull * integer_inverse(pull) == int_identity(lat.rank()));
}

TEST_CASE("Lehmer's number from the (1, 1, 8) orbit data") {
  const PicardLattice lat(2, OrbitData::coxeter(2, 8));
  const auto root = spectral_root(coxeter_action(lat), 256);
  REQUIRE(root.has_value());
  CHECK(near(root->midpoint, oracle::kLehmer));
}

TEST_CASE("T-shaped Coxeter elements") {
  const auto e8 = coxeter_element_tpqr(2, 3, 5);
  CHECK_FALSE(e8.leading_root.has_value());
  CHECK(e8.spectral_radius() == 1.0);
  CHECK(spectra::strip_cyclotomic(e8.char_poly).core_is_constant());
  const auto t237 = coxeter_element_tpqr(2, 3, 7, 256);
  std::vector<mpz_class> c(std::begin(oracle::kT_2_3_7_poly), std::end(oracle::kT_2_3_7_poly));
  CHECK(t237.char_poly == arith::IntegerPolynomial(c));
  REQUIRE(t237.leading_root.has_value());
  CHECK(near(t237.leading_root->midpoint, oracle::kLehmer));
  CHECK(near(coxeter_element_tpqr(2, 3, 9, 256).leading_root->midpoint, oracle::kT_2_3_9));
  for (auto [k, n] : {std::pair{2, 8}, {3, 6}}) {
    const auto spectrum = spectra::classify_exceptional(Family::pk, k, n);
    const auto cox = coxeter_element_tpqr(2, k + 1, n - 1);
    CHECK(spectra::strip_cyclotomic(cox.char_poly).core == *spectrum.salem_factor);
  }
}

TEST_CASE("canonical pairings") {
  auto pairings = [](int k, int total) {
    OrbitData d = OrbitData::coxeter(k, total - k);
    return canonical_pairings(k, d);
  };
  CHECK(pairings(2, 9).self_gram == 0);
  CHECK(pairings(3, 8).self_gram == 0);
  CHECK(pairings(5, 9).self_gram == 0);
  CHECK(pairings(2, 9).curve_degrees == 0);
  CHECK(pairings(3, 8).curve_degrees == 0);
  CHECK(pairings(2, 10).curve_degrees == 1);
  const auto p = pairings(4, 11);
  CHECK(p.agree);
  CHECK(p.self_closed == p.self_gram);
  CHECK(p.curve_closed == p.curve_degrees);
  CHECK(p.anticanonical == mpz_class(3) * p.curve_degrees);
}

TEST_CASE("biprojective action") {
  for (auto [k, n] : {std::pair{2, 5}, {3, 4}, {6, 3}}) {
    const auto m = biproj_pic_action(k, n);
    CHECK(m.rows() == static_cast<std::size_t>(k + n + 2));
    const PicardLattice lat(k, OrbitData::coxeter(k, n), LatticeKind::biprojective);
    CHECK(m * lat.canonical() == lat.canonical());
    const auto spectrum = spectra::classify_exceptional(Family::biproj, k, n);
    const auto cp = characteristic_polynomial(m);
    CHECK((cp == spectrum.full_poly || cp == -spectrum.full_poly));
    CHECK(spectra::strip_cyclotomic(cp).core == *spectrum.salem_factor);
  }
  const auto r = spectral_root(biproj_pic_action(2, 5), 128);
  REQUIRE(r.has_value());
  CHECK(std::abs(r->midpoint.to_double() - 1.40127) < 5e-5);
}

TEST_CASE("trace compatibility on degree-zero classes") {
  for (auto [k, n] : {std::pair{2, 8}, {3, 6}}) {
    const auto c = construct::construct(Family::pk, k, n);
    const auto orbit = verify::verify_orbit(c.field, c.map);
    const auto r = trace_compatibility(c, orbit);
    CHECK(r.samples.size() == 3);
    for (const auto& s : r.samples) {
      CHECK_MESSAGE(s.pushforward_scales, s.label);
      CHECK_MESSAGE(s.pullback_scales, s.label);
      CHECK_FALSE(s.trace.is_zero());
    }
    CHECK(r.canonical_invariant);
    CHECK(r.canonical_trace_preserved);
    CHECK(r.salem_divides_pullback);
    CHECK(r.salem_divides_coxeter);
    CHECK(r.passed());
  }
}

TEST_CASE("trace compatibility refuses unverified input and curve-positive classes") {
  const auto c = construct::construct(Family::pk, 2, 8);
  const auto bad = verify::verify_orbit(c.field, verify::perturb_beta(c.map, 1, mpq_class(1, 7)));
  CHECK_THROWS_AS(trace_compatibility(c, bad), UnverifiedConstruction);
  const auto good = verify::verify_orbit(c.field, c.map);
  IntVector h(11, 0);
  h[0] = 1;
  CHECK_THROWS_AS(trace_compatibility(c, good, {{"H", h}}), InvalidInput);
}

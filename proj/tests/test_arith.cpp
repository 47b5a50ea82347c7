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

#include <random>

#include <doctest.h>

#include "cremona/arith/embedding.hpp"
#include "cremona/arith/rational_field.hpp"
#include "cremona/spectra/spectra.hpp"
#include "oracle_values.hpp"

using namespace cremona;
using namespace cremona::arith;

namespace {

NumberField lehmer_field() { return NumberField(spectra::classify_exceptional(Family::pk, 2, 8).salem_factor.value()); }

NumberFieldElement random_element(const NumberField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  std::vector<mpq_class> c;
  for (int i = 0; i < f.degree(); ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return f.element(RationalPolynomial(std::move(c)));
}

}  // namespace

TEST_CASE("polynomial arithmetic and division") {
  const IntegerPolynomial a{-1, 0, 1};  // x^2 - 1
  const IntegerPolynomial b{1, 1};      // x + 1
  CHECK(a.degree() == 2);
  CHECK((a * b).degree() == 3);
  CHECK(exact_quotient(a, b) == IntegerPolynomial{-1, 1});
  CHECK_FALSE(exact_quotient(a, IntegerPolynomial{2, 1}).has_value());
  const auto [q, r] = divmod(to_rational(a), to_rational(IntegerPolynomial{2, 1}));
  CHECK(r == RationalPolynomial{3});
  CHECK(q == RationalPolynomial{-2, 1});
  CHECK_THROWS_AS(divmod(to_rational(a), RationalPolynomial{}), InvalidInput);
  CHECK(IntegerPolynomial{0, 0, 0}.is_zero());
  CHECK(IntegerPolynomial{}.degree() == -1);
  CHECK(to_string(IntegerPolynomial{-1, 0, 1}) == to_string(a));
}

TEST_CASE("gcd, reciprocity and primitive parts") {
  const auto g = gcd(to_rational(IntegerPolynomial{-1, 0, 1}), to_rational(IntegerPolynomial{1, 2, 1}));
  CHECK(g == RationalPolynomial{1, 1});
  CHECK(is_reciprocal(IntegerPolynomial{1, 3, 1}));
  CHECK_FALSE(is_reciprocal(IntegerPolynomial{1, 3, 2}));
  CHECK(primitive_part(RationalPolynomial{mpq_class(-1, 2), mpq_class(-1, 3)}) == IntegerPolynomial{3, 2});
  CHECK(derivative(IntegerPolynomial{5, 3, 1}) == IntegerPolynomial{3, 2});
  CHECK(sign_at(RationalPolynomial{-2, 0, 1}, mpq_class(3, 2)) == 1);
  CHECK(sign_at(RationalPolynomial{-2, 0, 1}, mpq_class(1)) == -1);
}

TEST_CASE("number field construction rejects bad moduli") {
  CHECK_THROWS_AS(NumberField(IntegerPolynomial{1}), InvalidInput);
  CHECK_THROWS_AS(NumberField(IntegerPolynomial{1, 2}), InvalidInput);
}

TEST_CASE("field axioms hold in Q(delta) on random elements") {
  const auto f = lehmer_field();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_element(f, rng);
    const auto b = random_element(f, rng);
    const auto c = random_element(f, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + f.zero() == a);
    CHECK(a * f.one() == a);
    CHECK(a - a == f.zero());
    if (!a.is_zero()) CHECK(a * (f.one() / a) == f.one());
  }
}

TEST_CASE("generator satisfies its modulus and powers wrap") {
  const auto f = lehmer_field();
  const auto d = f.generator();
  NumberFieldElement acc = f.zero();
  const auto& mod = f.modulus();
  for (int i = mod.degree(); i >= 0; --i) acc = acc * d + f.from_integer(mod.coefficient(static_cast<std::size_t>(i)));
  CHECK(acc.is_zero());
  CHECK(d.pow(5) * d.pow(-5) == f.one());
  CHECK(d.pow(0) == f.one());
  CHECK_THROWS_AS(f.one() / f.zero(), DivisionByZero);
}

TEST_CASE("inverting a zero divisor in a reducible quotient reports the factor") {
  const NumberField f(IntegerPolynomial{-1, 0, 1});  // (x-1)(x+1)
  const auto z = f.generator() - mpq_class(1);
  try {
    (void)(f.one() / z);
    FAIL("expected ZeroDivisorError");
  } catch (const ZeroDivisorError& e) {
    CHECK(e.factor() == IntegerPolynomial{-1, 1});
  }
}

TEST_CASE("rationals are canonicalized on entry") {
  const auto f = lehmer_field();
  CHECK(f.from_rational(mpq_class(2, 4)) == f.from_rational(mpq_class(1, 2)));
}

TEST_CASE("BigFloat arithmetic and parsing") {
  const BigFloat a("1.5", 128);
  const BigFloat b(mpq_class(1, 3), 128);
  CHECK((a * b).to_double() == doctest::Approx(0.5));
  CHECK(a > b);
  CHECK(abs(BigFloat(-2, 128)).to_double() == 2.0);
  CHECK(pow(BigFloat(2, 128), 10).to_double() == 1024.0);
  CHECK(BigFloat::exp2(-10, 64).to_double() == doctest::Approx(1.0 / 1024));
  CHECK_THROWS_AS(BigFloat("abc", 64), InvalidInput);
  CHECK(BigFloat(std::string(oracle::kLehmer), 256).to_string(12) == "1.17628081826");
}

TEST_CASE("float backend tolerance scales with precision") {
  const FloatField ff(256);
  const BigFloat x("1.25", 256);
  CHECK(ff.equal(x, x + ff.zero_threshold()));
  CHECK_FALSE(ff.equal(x, x + BigFloat("1e-20", 256)));
  CHECK(ff.is_zero(ff.zero_threshold() / BigFloat(2, 256)));
}

TEST_CASE("real embedding of Q(delta) matches the oracle root") {
  const auto report = spectra::classify_exceptional(Family::pk, 2, 8, 256);
  const NumberField f(*report.salem_factor);
  const RealEmbedding e(f, report.delta->midpoint, BigFloat::exp2(-250, 300));
  const BigFloat lehmer(std::string(oracle::kLehmer), 256);
  CHECK(abs(e(f.generator()) - lehmer) < BigFloat("1e-29", 256));
  const auto sq = nf_embed(f.generator() * f.generator(), report.delta->midpoint);
  CHECK(sq.contains(report.delta->midpoint * report.delta->midpoint));
  CHECK_FALSE(sq.contains(lehmer * lehmer + BigFloat("1e-20", 256)));
  CHECK_THROWS_AS(RealEmbedding(f, BigFloat("1.3", 256), BigFloat::exp2(-200, 256)), InconsistentEmbedding);
}

TEST_CASE("rational backend satisfies the scalar field concept") {
  const RationalField q;
  CHECK(q.equal(q.from_rational(mpq_class(1, 2)) + q.from_int(1), mpq_class(3, 2)));
  CHECK(q.is_zero(q.zero()));
}

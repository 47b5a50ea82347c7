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

#include "cremona/arith/big_float.hpp"
#include "cremona/arith/rational_field.hpp"
#include "cremona/geometry/curve.hpp"
#include "cremona/geometry/lines.hpp"
#include "cremona/geometry/projective.hpp"

using namespace cremona;
using namespace cremona::geometry;
using arith::RationalField;

namespace {

mpq_class random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 11);
  long a = 0;
  while (a == 0) a = num(rng);
  mpq_class q(a, den(rng));
  q.canonicalize();
  return q;
}

ProjectivePoint<mpq_class> random_torus_point(const RationalField& q, std::size_t k, std::mt19937_64& rng) {
  std::vector<mpq_class> c;
  for (std::size_t i = 0; i <= k; ++i) c.push_back(random_nonzero(rng));
  return {q, std::move(c)};
}

}  // namespace

TEST_CASE("J is an involution on 500 random torus points") {
  const RationalField q;
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 2 + static_cast<std::size_t>(trial % 4);
    const auto p = random_torus_point(q, k, rng);
    CHECK(projective_equal(q, apply_J(q, apply_J(q, p)), p));
  }
}

TEST_CASE("J is an involution in floating point") {
  const arith::FloatField ff(256);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<arith::BigFloat> c;
    for (int i = 0; i < 4; ++i) c.emplace_back(random_nonzero(rng), 256);
    const ProjectivePoint<arith::BigFloat> p(ff, c);
    CHECK(projective_residual(ff, apply_J(ff, apply_J(ff, p)), p) < 1e-60);
  }
}

TEST_CASE("J blows up vertices and is undefined on codimension-two strata") {
  const RationalField q;
  const auto e0 = basis_point(q, 3, 0);
  CHECK(in_indeterminacy_of_J(q, e0));
  CHECK_THROWS_AS(apply_J(q, e0), IndeterminacyError);
  const ProjectivePoint<mpq_class> edge(q, {1, 1, 0, 0});
  CHECK(in_indeterminacy_of_J(q, edge));
  const ProjectivePoint<mpq_class> face(q, {1, 2, 3, 0});
  CHECK_FALSE(in_indeterminacy_of_J(q, face));
  CHECK(projective_equal(q, apply_J(q, face), basis_point(q, 3, 3)));
  CHECK_THROWS_AS(ProjectivePoint<mpq_class>(q, {0, 0, 0}), InvalidInput);
}

TEST_CASE("multi-factor J and its inverse") {
  const RationalField q;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoint<mpq_class> p{random_torus_point(q, 2, rng), random_torus_point(q, 2, rng), random_torus_point(q, 2, rng)};
    const auto back = apply_J_multi_inverse(q, apply_J_multi(q, p));
    for (std::size_t f = 0; f < p.size(); ++f) CHECK(projective_equal(q, back[f], p[f]));
  }
  const BiProjectivePoint<mpq_class> bp{random_torus_point(q, 3, rng), random_torus_point(q, 3, rng)};
  const auto bb = apply_J_biproj_inverse(q, apply_J_biproj(q, bp));
  CHECK(projective_equal(q, bb.x, bp.x));
  CHECK(projective_equal(q, bb.y, bp.y));
}

TEST_CASE("matrix inverse, determinant and solve") {
  const RationalField q;
  Matrix<mpq_class> a(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 4});
  CHECK(determinant(q, a) == mpq_class(18));
  const auto inv = inverse(q, a);
  const auto id = a * inv;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(id(i, j) == mpq_class(i == j ? 1 : 0));
  const auto x = solve(q, a, std::vector<mpq_class>{1, 2, 3});
  const auto ax = a * x;
  CHECK(ax == std::vector<mpq_class>{1, 2, 3});
  Matrix<mpq_class> singular(2, 2, {1, 2, 2, 4});
  CHECK(determinant(q, singular) == 0);
  CHECK_THROWS_AS(inverse(q, singular), SingularMatrix);
  CHECK_THROWS_AS(LinearMap<mpq_class>(q, singular), SingularMatrix);
}

TEST_CASE("curve parameters round-trip") {
  const RationalField q;
  for (std::size_t k = 2; k <= 5; ++k) {
    for (long t : {-3L, 0L, 1L, 7L}) {
      const auto p = gamma_eval(q, CurveParam<mpq_class>(mpq_class(t)), k);
      CHECK(param_recover(q, p, k).value() == mpq_class(t));
    }
    CHECK(param_recover(q, gamma_eval(q, CurveParam<mpq_class>::infinity(), k), k).is_infinity());
    CHECK(param_recover(q, unit_point(q, k), k).value() == mpq_class(1));  // (1, ..., 1) = γ(1)
    std::vector<mpq_class> off(k + 1, mpq_class(1));
    off[k] = 2;
    CHECK_THROWS_AS(param_recover(q, ProjectivePoint<mpq_class>(q, off), k), NotOnCurve);
  }
  const auto bp = gamma1_eval(q, CurveParam<mpq_class>(mpq_class(5, 2)), 3);
  CHECK(param_recover_biproj(q, bp, 3).value() == mpq_class(5, 2));
}

TEST_CASE("the scaling map acts on the curve parameter") {
  const RationalField q;
  const auto t_map = t_lambda(q, mpq_class(3), 3);
  const auto image = apply_linear(q, t_map, gamma_eval(q, CurveParam<mpq_class>(mpq_class(2)), 3));
  CHECK(param_recover(q, image, 3).value() == mpq_class(6));
}

TEST_CASE("hyperplane sections have parameters summing to zero") {
  const auto poly = hyperplane_section<mpq_class>({1, 2, 3, 4}, mpq_class(0));
  REQUIRE(poly.size() == 5);
  CHECK(poly[3] == 0);  // t^k coefficient
  CHECK(poly[4] == 4);
}

TEST_CASE("line union membership in both charts") {
  const RationalField q;
  for (std::size_t j = 0; j <= 3; ++j) {
    const auto p = line_point(q, 3, j, CurveParam<mpq_class>(mpq_class(5)));
    const auto hits = line_union_membership(q, p);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].line == j);
    CHECK(hits[0].t.value() == mpq_class(5));
    const auto pp = line_point(q, 3, j, CurveParam<mpq_class>(mpq_class(5)), LineChart::vertex_chart);
    const auto ph = line_union_membership(q, pp, LineChart::vertex_chart);
    REQUIRE_FALSE(ph.empty());
    CHECK(ph[0].line == j);
  }
  CHECK(line_union_membership(q, ProjectivePoint<mpq_class>(q, {1, 2, 3, 4})).empty());
  // The concurrence point lies on every line.
  CHECK(line_union_membership(q, unit_point(q, 3)).size() == 4);
}

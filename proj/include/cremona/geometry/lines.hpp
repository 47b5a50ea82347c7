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

#include <vector>

#include "cremona/geometry/curve.hpp"

namespace cremona::geometry {

/**
 * Parametrisations of the k+1 concurrent lines.
 *
 * map_chart: line j joins [1:...:1] and e_j, ψ_j(t) has -t in slot j and 1
 * elsewhere. These are the lines the lines-family matrices permute.
 *
 * vertex_chart: ψ_0(t) = [-t:1:...:1] and, for j ≥ 1, ψ_j(t) = [t:0:...:1:...:0]
 * with the 1 in slot j. All of these pass through e_0.
 */
enum class LineChart { map_chart, vertex_chart };

/// One (line, parameter) incidence; t = ∞ is the line's point at infinity.
template <class S>
struct LineHit {
  std::size_t line;
  CurveParam<S> t;
};

/// All lines through p, with parameters. Empty when p is off the union.
template <arith::ScalarField F>
std::vector<LineHit<typename F::Scalar>> line_union_membership(const F& field,
                                                               const ProjectivePoint<typename F::Scalar>& p,
                                                               LineChart chart = LineChart::map_chart) {
  using S = typename F::Scalar;
  using Param = CurveParam<S>;
  const std::size_t n = p.size();
  std::vector<LineHit<S>> hits;
  if (chart == LineChart::map_chart) {
    for (std::size_t j = 0; j < n; ++j) {
      // Every coordinate off slot j must share one value c.
      const std::size_t ref = j == 0 ? 1 : 0;
      bool on_line = true;
      for (std::size_t i = 0; i < n && on_line; ++i)
        if (i != j && !field.equal(p[i], p[ref])) on_line = false;
      if (!on_line) continue;
      if (field.is_zero(p[ref])) hits.push_back({j, Param::infinity()});
      else hits.push_back({j, Param(-(p[j] / p[ref]))});
    }
    return hits;
  }
  // vertex chart, line 0
  {
    bool on_line = true;
    for (std::size_t i = 2; i < n && on_line; ++i)
      if (!field.equal(p[i], p[1])) on_line = false;
    if (on_line) {
      if (field.is_zero(p[1])) hits.push_back({0, Param::infinity()});
      else hits.push_back({0, Param(-(p[0] / p[1]))});
    }
  }
  for (std::size_t j = 1; j < n; ++j) {
    bool on_line = true;
    for (std::size_t i = 1; i < n && on_line; ++i)
      if (i != j && !field.is_zero(p[i])) on_line = false;
    if (!on_line) continue;
    if (field.is_zero(p[j])) hits.push_back({j, Param::infinity()});
    else hits.push_back({j, Param(p[0] / p[j])});
  }
  return hits;
}

/// ψ_j(t) in the chosen chart.
template <arith::ScalarField F>
ProjectivePoint<typename F::Scalar> line_point(const F& field, std::size_t k, std::size_t j,
                                               const CurveParam<typename F::Scalar>& t,
                                               LineChart chart = LineChart::map_chart) {
  using S = typename F::Scalar;
  if (j > k) throw InvalidInput("line index out of range");
  if (chart == LineChart::map_chart || j == 0) {
    if (t.is_infinity()) return basis_point(field, k, j);
    std::vector<S> c(k + 1, field.one());
    c[j] = -t.value();
    return {field, std::move(c)};
  }
  if (t.is_infinity()) return basis_point(field, k, 0);
  std::vector<S> c(k + 1, field.zero());
  c[0] = t.value();
  c[j] = field.one();
  return {field, std::move(c)};
}

}  // namespace cremona::geometry

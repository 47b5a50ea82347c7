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

#include "cremona/verify/verify.hpp"

namespace cremona::verify {

MapData<arith::NumberFieldElement> perturb_beta(const MapData<arith::NumberFieldElement>& d, int i,
                                                const mpq_class& by) {
  if (i < 1 || i > d.k) throw InvalidInput("beta index must lie in 1..k");
  MapData<arith::NumberFieldElement> out = d;
  const auto row = static_cast<std::size_t>(i);
  auto& entry = out.L.at(0)(row, row - 1);
  entry = entry + by;
  return out;
}

TranslationControl translation_control(int k) {
  if (k < 2) throw InvalidInput("k must be at least 2");
  arith::NumberField q(arith::IntegerPolynomial{-1, 1});  // Q[x]/(x - 1): δ = 1
  std::vector<arith::NumberFieldElement> t_plus;
  for (int j = 0; j <= k; ++j) t_plus.push_back(q.from_int(j + 1));
  auto map = construct::build_basic_map(q, q.generator(), t_plus);
  return {q, std::move(map)};
}

}  // namespace cremona::verify

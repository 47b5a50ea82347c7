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

#include <string>
#include <vector>

#include "cremona/construct/construct.hpp"
#include "cremona/picard/lattice.hpp"
#include "cremona/verify/verify.hpp"

namespace cremona::picard {

/// The orbit report is missing or failed; traces are meaningless without it.
class UnverifiedConstruction : public std::runtime_error {
 public:
  UnverifiedConstruction() : std::runtime_error("trace compatibility requires a verified construction") {}
};

struct TraceSample {
  std::string label;
  IntVector divisor_class;
  construct::Q trace;          // tr(D)
  construct::Q pushed_trace;   // tr(F_* D)
  construct::Q pulled_trace;   // tr(F^* D)
  bool pushforward_scales = false;  // tr(F_* D) = δ tr(D)
  bool pullback_scales = false;     // tr(F^* D) = δ⁻¹ tr(D)
};

struct TraceReport {
  std::vector<TraceSample> samples;
  std::vector<construct::Q> point_params;  // curve parameter of each exceptional class
  bool canonical_invariant = false;        // F^* K = K
  bool canonical_trace_preserved = false;  // tr(F_* K) = tr(K)
  bool salem_divides_pullback = false;     // Salem factor | charpoly(F^*)
  bool salem_divides_coxeter = false;      // Salem factor | charpoly(s_0 σ̂ π_0...π_k)

  bool passed() const;
};

/**
 * Curve-parameter trace on Pic(X) for the single-space family:
 * tr(H) = 0 (a hyperplane meets the curve in parameters summing to zero)
 * and tr(E) is the parameter of the blown-up point.
 */
construct::Q trace_of(const IntVector& divisor_class, const std::vector<construct::Q>& point_params,
                      const construct::NumberField& field);

/// Parameters of the blown-up points in lattice order, for orbit data (1, ..., 1, n).
std::vector<construct::Q> exceptional_params(const construct::CoxeterConstruction& c, const PicardLattice& lattice);

/// (k+1)E_{0,1} - H, E_{k,1} - E_{0,1}, E_{k,n} - E_{1,1}.
std::vector<std::pair<std::string, IntVector>> default_trace_samples(const PicardLattice& lattice);

/**
 * Checks tr ∘ F_* = δ tr on degree-zero sample classes, exactly in Q(δ).
 * Throws UnverifiedConstruction unless `orbit` passed, InvalidInput for
 * families other than pk or classes of nonzero degree on the curve.
 */
TraceReport trace_compatibility(const construct::CoxeterConstruction& c,
                                const verify::OrbitCheckReport<construct::Q>& orbit,
                                const std::vector<std::pair<std::string, IntVector>>& samples);
TraceReport trace_compatibility(const construct::CoxeterConstruction& c,
                                const verify::OrbitCheckReport<construct::Q>& orbit);

}  // namespace cremona::picard

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
#include <utility>
#include <vector>

#include "cremona/picard/integer_matrix.hpp"

namespace cremona::picard {

/// Orbit lengths (n_0, ..., n_k) and the permutation σ of {0, ..., k}.
struct OrbitData {
  std::vector<int> lengths;
  std::vector<int> sigma;

  int total() const;
  /// Throws InvalidInput unless lengths are positive and σ is a bijection of size k+1.
  void validate(int k) const;
  /// (1, ..., 1, n) with σ(i) = i+1 mod k+1.
  static OrbitData coxeter(int k, int n);
};

enum class LatticeKind { single, biprojective };

/**
 * Combinatorial Picard lattice. Basis: H (and V for the biprojective kind)
 * followed by the exceptional classes in relabelled order E_0, ..., E_{N-1}.
 *
 * Relabelling: E_i = E_{i,1} for i ≤ k, then E_{k,2} when n_k ≥ 2, then the
 * remaining E_{i,j} in lexicographic (i, j) order.
 */
class PicardLattice {
 public:
  PicardLattice(int k, OrbitData orbits, LatticeKind kind = LatticeKind::single);

  int k() const { return k_; }
  const OrbitData& orbits() const { return orbits_; }
  LatticeKind kind() const { return kind_; }
  std::size_t rank() const { return offset() + exceptional_.size(); }
  /// Number of non-exceptional basis classes (1 or 2).
  std::size_t offset() const { return kind_ == LatticeKind::single ? 1 : 2; }
  /// Basis index of E_{i,j} (1-based j).
  std::size_t index_of(int i, int j) const;
  /// (i, j) of the exceptional class at relabelled position e.
  const std::pair<int, int>& exceptional(std::size_t e) const { return exceptional_.at(e); }
  std::vector<std::string> labels() const;

  /// diag(k-1, -1, ..., -1); only defined for the single kind.
  IntMatrix gram() const;
  /// α_0 = H - Σ E_{i,1}, α_i = E_i - E_{i-1}.
  std::vector<IntVector> roots() const;
  IntMatrix root_gram() const;
  /// Canonical class: -(k+1)H + (k-1)ΣE, or -(k+1)(H+V) + (2k-1)ΣE.
  IntVector canonical() const;
  /// Intersection numbers with the invariant curve: H·C = k+1, E·C = 1.
  IntVector curve_degrees() const;

 private:
  int k_;
  OrbitData orbits_;
  LatticeKind kind_;
  std::vector<std::pair<int, int>> exceptional_;
  std::vector<std::vector<std::size_t>> index_;  // [i][j-1] -> basis index
};

/// s(D) = D + ⟨D, α⟩ α. Throws InvalidInput unless ⟨α, α⟩ = -2.
IntMatrix reflection(const IntVector& alpha, const IntMatrix& gram);

/// s_0 σ̂ π_0 ... π_k with π_i: E_{i,j} → E_{i,j+1} cyclically and σ̂: E_{i,1} → E_{σ(i),1}.
IntMatrix coxeter_action(const PicardLattice& lattice);

/**
 * Pullback built from the blowup data: F*H = kH - (k-1) Σ E_{i,1},
 * F*E_{i,j} = E_{i,j+1} (j < n_i), F*E_{i,n_i} = H - Σ_{l ≠ σ⁻¹(i)} E_{l,1}.
 */
IntMatrix geometric_pullback(const PicardLattice& lattice);

/**
 * Pushforward on the biprojective lattice: F_*V = kH - (k-1) Σ_l E_{l,n_l},
 * F_*H = V + kH - k Σ_l E_{l,n_l}, F_*E_{i,j} = E_{i,j-1} (j ≥ 2),
 * F_*E_{i,1} = H - Σ_{l ≠ σ(i)} E_{l,n_l}.
 */
IntMatrix biproj_pic_action(int k, const OrbitData& orbits);
IntMatrix biproj_pic_action(int k, int n);

struct CanonicalPairings {
  mpz_class self_closed;     // (k+1)²(k-1) - (k-1)² N
  mpz_class self_gram;       // ⟨K, K⟩ from the Gram matrix
  mpz_class curve_closed;    // N(k-1) - (k+1)²
  mpz_class curve_degrees;   // K·C from H·C and E·C
  mpz_class anticanonical;   // ⟨C-class, -K⟩ realised as ⟨K, -K⟩
  bool agree = false;        // closed forms match recomputation, and ⟨K,-K⟩ = (k-1) K·C
};

/// Throws std::logic_error if the closed forms and the recomputation disagree.
CanonicalPairings canonical_pairings(int k, const OrbitData& orbits);

}  // namespace cremona::picard

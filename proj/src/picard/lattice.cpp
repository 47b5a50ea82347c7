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

#include "cremona/picard/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cremona::picard {

int OrbitData::total() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

void OrbitData::validate(int k) const {
  if (k < 2) throw InvalidInput("k must be at least 2");
  const auto size = static_cast<std::size_t>(k + 1);
  if (lengths.size() != size) throw InvalidInput("orbit data needs k+1 lengths");
  if (sigma.size() != size) throw InvalidInput("sigma must permute k+1 indices");
  if (std::ranges::any_of(lengths, [](int n) { return n < 1; })) throw InvalidInput("orbit lengths must be positive");
  std::vector<bool> seen(size, false);
  for (int s : sigma) {
    if (s < 0 || s > k || seen[static_cast<std::size_t>(s)]) throw InvalidInput("sigma is not a permutation");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

OrbitData OrbitData::coxeter(int k, int n) {
  if (k < 2 || n < 1) throw InvalidInput("need k >= 2 and n >= 1");
  OrbitData d;
  d.lengths.assign(static_cast<std::size_t>(k + 1), 1);
  d.lengths.back() = n;
  for (int i = 0; i <= k; ++i) d.sigma.push_back((i + 1) % (k + 1));
  return d;
}

PicardLattice::PicardLattice(int k, OrbitData orbits, LatticeKind kind)
    : k_(k), orbits_(std::move(orbits)), kind_(kind) {
  orbits_.validate(k_);
  for (int i = 0; i <= k_; ++i) exceptional_.emplace_back(i, 1);
  const int nk = orbits_.lengths[static_cast<std::size_t>(k_)];
  if (nk >= 2) exceptional_.emplace_back(k_, 2);
  for (int i = 0; i <= k_; ++i)
    for (int j = 2; j <= orbits_.lengths[static_cast<std::size_t>(i)]; ++j)
      if (!(i == k_ && j == 2)) exceptional_.emplace_back(i, j);
  index_.resize(static_cast<std::size_t>(k_ + 1));
  for (int i = 0; i <= k_; ++i) index_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(orbits_.lengths[static_cast<std::size_t>(i)]));
  for (std::size_t e = 0; e < exceptional_.size(); ++e) {
    const auto [i, j] = exceptional_[e];
    index_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = offset() + e;
  }
}

std::size_t PicardLattice::index_of(int i, int j) const {
  return index_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j - 1));
}

std::vector<std::string> PicardLattice::labels() const {
  std::vector<std::string> out{"H"};
  if (kind_ == LatticeKind::biprojective) out.emplace_back("V");
  for (const auto& [i, j] : exceptional_) out.push_back("E[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return out;
}

IntMatrix PicardLattice::gram() const {
  if (kind_ != LatticeKind::single) throw InvalidInput("no invariant form is fixed for the biprojective lattice");
  IntMatrix g(rank(), rank(), mpz_class(0));
  g(0, 0) = k_ - 1;
  for (std::size_t i = 1; i < rank(); ++i) g(i, i) = -1;
  return g;
}

std::vector<IntVector> PicardLattice::roots() const {
  std::vector<IntVector> out;
  IntVector a0(rank(), mpz_class(0));
  a0[0] = 1;
  for (int i = 0; i <= k_; ++i) a0[index_of(i, 1)] = -1;
  out.push_back(std::move(a0));
  for (std::size_t e = 1; e < exceptional_.size(); ++e) {
    IntVector a(rank(), mpz_class(0));
    a[offset() + e] = 1;
    a[offset() + e - 1] = -1;
    out.push_back(std::move(a));
  }
  return out;
}

IntMatrix PicardLattice::root_gram() const {
  const auto g = gram();
  const auto r = roots();
  IntMatrix out(r.size(), r.size(), mpz_class(0));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) out(i, j) = pairing(g, r[i], r[j]);
  return out;
}

IntVector PicardLattice::canonical() const {
  IntVector K(rank(), mpz_class(0));
  if (kind_ == LatticeKind::single) {
    K[0] = -(k_ + 1);
    for (std::size_t i = 1; i < rank(); ++i) K[i] = k_ - 1;
  } else {
    K[0] = K[1] = -(k_ + 1);
    for (std::size_t i = 2; i < rank(); ++i) K[i] = 2 * k_ - 1;
  }
  return K;
}

IntVector PicardLattice::curve_degrees() const {
  IntVector d(rank(), mpz_class(1));
  d[0] = k_ + 1;
  if (kind_ == LatticeKind::biprojective) d[1] = k_ + 1;
  return d;
}

IntMatrix reflection(const IntVector& alpha, const IntMatrix& gram) {
  if (pairing(gram, alpha, alpha) != -2) throw InvalidInput("reflection needs a root with self-pairing -2");
  const std::size_t n = alpha.size();
  const IntVector g_alpha = gram * alpha;  // ⟨e_c, α⟩ = (Gα)_c
  IntMatrix s = int_identity(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) s(r, c) += g_alpha[c] * alpha[r];
  return s;
}

IntMatrix coxeter_action(const PicardLattice& lat) {
  const int k = lat.k();
  const auto& orbits = lat.orbits();
  IntMatrix m = reflection(lat.roots().front(), lat.gram());

  IntMatrix shuffle = int_identity(lat.rank());
  for (int i = 0; i <= k; ++i) {
    const std::size_t from = lat.index_of(i, 1);
    shuffle(from, from) = 0;
  }
  for (int i = 0; i <= k; ++i)
    shuffle(lat.index_of(orbits.sigma[static_cast<std::size_t>(i)], 1), lat.index_of(i, 1)) = 1;
  m = m * shuffle;

  for (int i = 0; i <= k; ++i) {
    const int len = orbits.lengths[static_cast<std::size_t>(i)];
    if (len == 1) continue;
    IntMatrix cycle = int_identity(lat.rank());
    for (int j = 1; j <= len; ++j) cycle(lat.index_of(i, j), lat.index_of(i, j)) = 0;
    for (int j = 1; j <= len; ++j) cycle(lat.index_of(i, j == len ? 1 : j + 1), lat.index_of(i, j)) = 1;
    m = m * cycle;
  }
  return m;
}

IntMatrix geometric_pullback(const PicardLattice& lat) {
  const int k = lat.k();
  const auto& orbits = lat.orbits();
  std::vector<int> sigma_inv(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) sigma_inv[static_cast<std::size_t>(orbits.sigma[static_cast<std::size_t>(i)])] = i;

  IntMatrix m(lat.rank(), lat.rank(), mpz_class(0));
  m(0, 0) = k;
  for (int l = 0; l <= k; ++l) m(lat.index_of(l, 1), 0) = -(k - 1);
  for (int i = 0; i <= k; ++i) {
    const int len = orbits.lengths[static_cast<std::size_t>(i)];
    for (int j = 1; j < len; ++j) m(lat.index_of(i, j + 1), lat.index_of(i, j)) = 1;
    const std::size_t last = lat.index_of(i, len);
    m(0, last) = 1;
    for (int l = 0; l <= k; ++l)
      if (l != sigma_inv[static_cast<std::size_t>(i)]) m(lat.index_of(l, 1), last) = -1;
  }
  return m;
}

IntMatrix biproj_pic_action(int k, const OrbitData& orbits) {
  const PicardLattice lat(k, orbits, LatticeKind::biprojective);
  IntMatrix m(lat.rank(), lat.rank(), mpz_class(0));
  auto last = [&](int l) { return lat.index_of(l, orbits.lengths[static_cast<std::size_t>(l)]); };
  // columns 0 = H, 1 = V
  m(0, 1) = k;
  m(1, 0) = 1;
  m(0, 0) = k;
  for (int l = 0; l <= k; ++l) {
    m(last(l), 1) -= k - 1;
    m(last(l), 0) -= k;
  }
  for (int i = 0; i <= k; ++i) {
    const int len = orbits.lengths[static_cast<std::size_t>(i)];
    for (int j = 2; j <= len; ++j) m(lat.index_of(i, j - 1), lat.index_of(i, j)) = 1;
    const std::size_t first = lat.index_of(i, 1);
    m(0, first) = 1;
    for (int l = 0; l <= k; ++l)
      if (l != orbits.sigma[static_cast<std::size_t>(i)]) m(last(l), first) -= 1;
  }
  return m;
}

IntMatrix biproj_pic_action(int k, int n) { return biproj_pic_action(k, OrbitData::coxeter(k, n)); }

CanonicalPairings canonical_pairings(int k, const OrbitData& orbits) {
  const PicardLattice lat(k, orbits);
  const mpz_class N = orbits.total();
  const mpz_class kp1 = k + 1, km1 = k - 1;
  CanonicalPairings p;
  p.self_closed = kp1 * kp1 * km1 - km1 * km1 * N;
  p.curve_closed = N * km1 - kp1 * kp1;
  const IntVector K = lat.canonical();
  p.self_gram = pairing(lat.gram(), K, K);
  const IntVector deg = lat.curve_degrees();
  // C·H = k+1 and C·E = 1 with the sign of K's coefficients.
  p.curve_degrees = K[0] * deg[0];
  for (std::size_t i = 1; i < K.size(); ++i) p.curve_degrees += K[i] * deg[i];
  IntVector minus_K = K;
  for (auto& c : minus_K) c = -c;
  p.anticanonical = pairing(lat.gram(), K, minus_K);
  p.agree = p.self_closed == p.self_gram && p.curve_closed == p.curve_degrees &&
            p.anticanonical == km1 * p.curve_degrees;
  if (!p.agree) throw std::logic_error("canonical pairings: closed forms disagree with the lattice");
  return p;
}

}  // namespace cremona::picard

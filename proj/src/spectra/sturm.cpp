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

#include "cremona/spectra/sturm.hpp"

#include "cremona/errors.hpp"

namespace cremona::spectra {

namespace {

int count_variations(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmChain::SturmChain(const RationalPolynomial& p) {
  if (p.degree() < 1) throw InvalidInput("Sturm chain needs a nonconstant polynomial");
  const RationalPolynomial dp = arith::derivative(p);
  const RationalPolynomial g = arith::gcd(p, dp);
  RationalPolynomial f0 = g.degree() > 0 ? arith::divmod(p, g).first : p;
  chain_.push_back(f0);
  chain_.push_back(arith::derivative(f0));
  while (chain_.back().degree() > 0) {
    RationalPolynomial r = -arith::divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations_at(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& f : chain_) signs.push_back(arith::sign_at(f, x));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& f : chain_) signs.push_back(sgn(f.leading()));
  return count_variations(signs);
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_roots_above(const mpq_class& a) const {
  return variations_at(a) - variations_at_infinity();
}

mpq_class root_bound(const RationalPolynomial& p) {
  mpq_class m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    mpq_class r = abs(p.coefficient(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

std::optional<IsolatedRoot> leading_salem_root(const arith::IntegerPolynomial& core, long precision_bits) {
  if (core.degree() < 1) throw InvalidInput("root isolation needs a nonconstant polynomial");
  const SturmChain chain(arith::to_rational(core));
  const mpq_class one = 1;
  const int above_one = chain.count_roots_above(one);
  if (above_one == 0) return std::nullopt;

  mpq_class lo = one, hi = root_bound(chain.squarefree());
  // Sturm bisection keeps the topmost root until it is alone in (lo, hi].
  while (chain.count_roots(lo, hi) > 1) {
    mpq_class mid = (lo + hi) / 2;
    if (chain.count_roots(mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  // Plain sign bisection from here; the root is simple in the squarefree part.
  const RationalPolynomial& f = chain.squarefree();
  int sign_hi = arith::sign_at(f, hi);
  const mpq_class width = mpq_class(1) / (mpz_class(1) << static_cast<mp_bitcnt_t>(precision_bits));
  while (hi - lo >= width) {
    if (sign_hi == 0) {
      lo = hi - width / 2;
      break;
    }
    mpq_class mid = (lo + hi) / 2;
    const int s = arith::sign_at(f, mid);
    if (s == 0) {
      lo = mid - width / 2;
      hi = mid;
      break;
    }
    if (s == sign_hi) hi = mid;
    else lo = mid;
  }
  const long prec = std::max(precision_bits + 16, arith::kMinPrecisionBits);
  arith::BigFloat mid(mpq_class((lo + hi) / 2), prec);
  return IsolatedRoot{lo, hi, std::move(mid), above_one};
}

}  // namespace cremona::spectra

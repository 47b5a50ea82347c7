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

#include "cremona/spectra/spectra.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "cremona/errors.hpp"

namespace cremona {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::pk: return "pk";
    case Family::biproj: return "biproj";
    case Family::lines: return "lines";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "pk") return Family::pk;
  if (name == "biproj") return Family::biproj;
  if (name == "lines") return Family::lines;
  throw InvalidInput("unknown family '" + std::string(name) + "' (expected pk, biproj or lines)");
}

}  // namespace cremona

namespace cremona::spectra {

namespace {

using arith::IntegerPolynomial;

IntegerPolynomial x_pow(int e) { return IntegerPolynomial::monomial(mpz_class(1), static_cast<std::size_t>(e)); }
IntegerPolynomial x_pow_minus_one(int e) { return IntegerPolynomial::x_pow_minus_one(static_cast<std::size_t>(e)); }
IntegerPolynomial x_pow_plus_one(int e) { return x_pow(e) + IntegerPolynomial{1}; }

void check_kn(int k, int n) {
  if (k < 2) throw InvalidInput("k must be at least 2");
  if (n < 1) throw InvalidInput("n must be at least 1");
}

std::vector<ClosedFormCheck> pk_closed_forms(int k, int n, const IntegerPolynomial& full) {
  std::vector<ClosedFormCheck> out;
  const IntegerPolynomial xm1{-1, 1};
  auto add = [&](std::string name, IntegerPolynomial expected) {
    const bool holds = expected == full;
    out.push_back({std::move(name), std::move(expected), holds});
  };
  if (n == 2) {
    add("alternative: (x-1)(x^(k+2)-1)", xm1 * x_pow_minus_one(k + 2));
    add("expanded: (x-1)(x^(k+3)-1)", xm1 * x_pow_minus_one(k + 3));
  } else if (n == 3) {
    const IntegerPolynomial xp1{1, 1};
    add("alternative: (x-1)^2(x+1)(x^(k+1)+1)", xm1 * xm1 * xp1 * x_pow_plus_one(k + 1));
    add("expanded: (x-1)^2(x+1)(x^(k+2)+1)", xm1 * xm1 * xp1 * x_pow_plus_one(k + 2));
  }
  return out;
}

std::vector<ClosedFormCheck> biproj_closed_forms(int k, int n, const IntegerPolynomial& full) {
  std::vector<ClosedFormCheck> out;
  if (n == 1) {
    IntegerPolynomial expected = x_pow_minus_one(k + 1) * IntegerPolynomial{1, 1, 1};
    const bool holds = expected == full;
    out.push_back({"(x^(k+1)-1)(x^2+x+1)", std::move(expected), holds});
  } else if (n == 2) {
    IntegerPolynomial expected = x_pow_minus_one(k + 4);
    const bool holds = expected == full;
    out.push_back({"x^(k+4)-1", std::move(expected), holds});
  }
  return out;
}

}  // namespace

IntegerPolynomial char_poly_pk(int k, int n) {
  check_kn(k, n);
  return x_pow_minus_one(n + k) * x_pow_minus_one(2) -
         x_pow(1) * x_pow_minus_one(k + 1) * x_pow_minus_one(n - 1);
}

IntegerPolynomial char_poly_biproj(int k, int n) {
  check_kn(k, n);
  std::vector<mpz_class> c(static_cast<std::size_t>(k + 1), mpz_class(2));
  c.front() = 1;
  c.back() = 1;
  const IntegerPolynomial sum_c(std::move(c));
  return x_pow(n) * (x_pow(k + 2) - sum_c) + x_pow(2) * sum_c - IntegerPolynomial{1};
}

IntegerPolynomial char_poly(Family family, int k, int n) {
  switch (family) {
    case Family::pk: return char_poly_pk(k, n);
    case Family::biproj: return char_poly_biproj(k, n);
    case Family::lines: break;
  }
  throw InvalidInput("the lines family has no closed-form characteristic polynomial");
}

bool listed_exceptional(Family family, int k, int n) {
  static constexpr std::array<std::pair<int, int>, 8> pk_list{
      {{2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {4, 4}, {5, 4}}};
  static constexpr std::array<std::pair<int, int>, 5> biproj_list{{{2, 3}, {2, 4}, {3, 3}, {4, 3}, {5, 3}}};
  const std::pair<int, int> kn{k, n};
  switch (family) {
    case Family::pk: return n <= 3 || std::ranges::find(pk_list, kn) != pk_list.end();
    case Family::biproj: return n <= 2 || std::ranges::find(biproj_list, kn) != biproj_list.end();
    case Family::lines: break;
  }
  return false;
}

SpectralReport classify_exceptional(Family family, int k, int n, long precision_bits) {
  SpectralReport r;
  r.family = family;
  r.k = k;
  r.n = n;
  r.full_poly = char_poly(family, k, n);
  r.split = strip_cyclotomic(r.full_poly);
  r.exceptional = r.split.core_is_constant();
  if (!r.exceptional) {
    r.salem_factor = r.split.core;
    r.salem_reciprocal = arith::is_reciprocal(r.split.core);
    r.delta = leading_salem_root(r.split.core, precision_bits);
  }
  r.listed = listed_exceptional(family, k, n);
  r.listing_agrees = r.listed == r.exceptional;
  r.closed_forms = family == Family::pk ? pk_closed_forms(k, n, r.full_poly)
                                        : biproj_closed_forms(k, n, r.full_poly);
  return r;
}

}  // namespace cremona::spectra

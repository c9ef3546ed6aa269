// Copyright 2026 The grcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense polynomials over GR(p^a, m), constant term first.

#pragma once

#include <string>
#include <vector>

#include "grcodes/galois_ring.hpp"

namespace grcodes {

using Poly = std::vector<GrElement>;

inline void poly_trim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// Degree of f, -1 for the zero polynomial.
inline long poly_degree(const Poly& f) {
  for (std::size_t k = f.size(); k-- > 0;)
    if (!f[k].is_zero()) return static_cast<long>(k);
  return -1;
}

inline Poly poly_from_ints(const GaloisRing& ring, std::initializer_list<std::int64_t> coeffs) {
  Poly f;
  for (auto c : coeffs) f.push_back(ring.from_int(c));
  poly_trim(f);
  return f;
}

inline Poly poly_monomial(const GaloisRing& ring, const GrElement& c, std::size_t k) {
  Poly f(k + 1, ring.zero());
  f[k] = c;
  poly_trim(f);
  return f;
}

inline Poly poly_add(const GaloisRing& ring, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), ring.zero());
  for (std::size_t k = 0; k < f.size(); ++k) r[k] = f[k];
  for (std::size_t k = 0; k < g.size(); ++k) r[k] = ring.add(r[k], g[k]);
  poly_trim(r);
  return r;
}

inline Poly poly_sub(const GaloisRing& ring, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), ring.zero());
  for (std::size_t k = 0; k < f.size(); ++k) r[k] = f[k];
  for (std::size_t k = 0; k < g.size(); ++k) r[k] = ring.sub(r[k], g[k]);
  poly_trim(r);
  return r;
}

inline Poly poly_scale(const GaloisRing& ring, const GrElement& c, const Poly& f) {
  Poly r;
  r.reserve(f.size());
  for (const auto& x : f) r.push_back(ring.mul(c, x));
  poly_trim(r);
  return r;
}

inline Poly poly_mul(const GaloisRing& ring, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  const unsigned m = ring.m();
  std::vector<Word> acc((f.size() + g.size() - 1) * m, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      ring.mul_add_into(f[i].coeffs().data(), g[j].coeffs().data(), acc.data() + (i + j) * m);
  }
  Poly r;
  r.reserve(f.size() + g.size() - 1);
  for (std::size_t k = 0; k + 1 < f.size() + g.size(); ++k)
    r.push_back(ring.from_words({acc.data() + k * m, m}));
  poly_trim(r);
  return r;
}

inline Poly poly_pow(const GaloisRing& ring, Poly f, std::uint64_t e) {
  Poly r{ring.one()};
  while (e) {
    if (e & 1) r = poly_mul(ring, r, f);
    e >>= 1;
    if (e) f = poly_mul(ring, f, f);
  }
  return r;
}

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

// Division by a divisor whose leading coefficient is a unit.
inline PolyDivision poly_divmod(const GaloisRing& ring, Poly num, const Poly& den) {
  long dd = poly_degree(den);
  if (dd < 0) throw PreconditionError("division by the zero polynomial");
  GrElement lead_inv = ring.inv(den[dd]);
  poly_trim(num);
  PolyDivision out;
  long dn = poly_degree(num);
  if (dn < dd) {
    out.remainder = std::move(num);
    return out;
  }
  out.quotient.assign(dn - dd + 1, ring.zero());
  for (long k = dn; k >= dd; --k) {
    if (num[k].is_zero()) continue;
    GrElement t = ring.mul(num[k], lead_inv);
    out.quotient[k - dd] = t;
    for (long j = 0; j <= dd; ++j) num[k - dd + j] = ring.sub(num[k - dd + j], ring.mul(t, den[j]));
  }
  num.resize(dd);
  poly_trim(num);
  poly_trim(out.quotient);
  out.remainder = std::move(num);
  return out;
}

inline Poly poly_divide_by_p_power(const GaloisRing& ring, const Poly& f, unsigned k) {
  Poly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(ring.divide_by_p_power(c, k));
  poly_trim(r);
  return r;
}

// A coefficient as it appears inside a polynomial: "3", or "(1+2u)" when
// more than one u-coefficient is nonzero.
inline std::string coeff_str(const GrElement& c) {
  std::string body;
  int terms = 0;
  auto cs = c.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    if (terms++) body += "+";
    if (k == 0 || cs[k] != 1) body += std::to_string(cs[k]);
    if (k == 1) body += "u";
    if (k > 1) body += "u^" + std::to_string(k);
  }
  if (terms == 0) return "0";
  return terms == 1 ? body : "(" + body + ")";
}

// Highest degree first, e.g. "x^2+2x+2".
inline std::string poly_str(const Poly& f) {
  std::string s;
  for (long k = poly_degree(f); k >= 0; --k) {
    if (f[k].is_zero()) continue;
    if (!s.empty()) s += "+";
    bool unit_coeff = f[k].is_one();
    if (k == 0 || !unit_coeff) s += coeff_str(f[k]);
    if (k == 1) s += "x";
    if (k > 1) s += "x^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace grcodes

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

// Witnesses for the binomial expansion identities of (x^4 + b)^{p^n}
// over Z_{p^a}[x] (or GR(p^a, m)[x]).

#pragma once

#include <string>

#include "grcodes/poly.hpp"

namespace grcodes {

struct ExpansionWitness {
  Word p = 0;
  unsigned n = 0;
  GrElement b;
  // Odd p: (x^4+b)^{p^n} = x^{4p^n} + b^{p^n} + p (x^4+b) theta.
  Poly theta;
  // p = 2: (x^4+b)^{2^n} = x^{2^{n+2}} + b^{2^n} + 2 alpha_n, and
  // alpha_n = (b x^4)^{2^{n-1}} + 2 beta_n.
  Poly alpha_n;
  Poly beta_n;
  // alpha_n is a unit of GR[x] / <x^{4 * 2^n} - lambda>.
  bool alpha_unit = false;
};

namespace detail {

// x^{4p^n} + b^{p^n}
inline Poly expansion_leading_terms(const GaloisRing& ring, const GrElement& b, Word pn) {
  Poly f = poly_monomial(ring, ring.one(), 4 * pn);
  f[0] = ring.add(f[0], ring.pow(b, pn));
  return f;
}

// For p = 2 the residue of R = GR[x]/<x^N - lambda> is F[x]/<(x - r)^N>
// with r^N = lambda mod 2, so f is a unit iff f(r) != 0 mod 2.
inline bool unit_in_char2_quotient(const GaloisRing& ring, const Poly& f, const GrElement& lambda, Word N) {
  const GaloisRing& field = ring.residue_field();
  GrElement lbar = ring.reduce_mod_p(lambda);
  for (Word idx = 1; idx < field.size(); ++idx) {
    GrElement r = field.element(idx);
    if (field.pow(r, N) != lbar) continue;
    GrElement value = field.zero();
    for (std::size_t k = f.size(); k-- > 0;) value = field.add(field.mul(value, r), ring.reduce_mod_p(f[k]));
    return !value.is_zero();
  }
  throw VerificationFailure("lambda has no N-th root in the residue field");
}

}  // namespace detail

// Computes the witness polynomials by exact division and checks that they
// reproduce (x^4 + b)^{p^n}. Throws VerificationFailure when a division
// leaves a remainder.
inline ExpansionWitness verify_expansion_identity(const GaloisRing& ring, const GrElement& b, unsigned n) {
  if (!ring.is_unit(b)) throw PreconditionError("b must be a unit");
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (ring.p() == 2 && ring.a() < 2) throw PreconditionError("the p = 2 identity needs a >= 2");
  const Word p = ring.p();
  const Word pn = checked_pow(p, n, Word{1} << 12);
  ExpansionWitness wit{p, n, b, {}, {}, {}, false};
  Poly base{b, ring.zero(), ring.zero(), ring.zero(), ring.one()};
  Poly full = poly_pow(ring, base, pn);
  Poly excess = poly_sub(ring, full, detail::expansion_leading_terms(ring, b, pn));
  Poly pee{ring.from_int(static_cast<std::int64_t>(p))};

  if (p != 2) {
    PolyDivision div = poly_divmod(ring, excess, base);
    if (!div.remainder.empty()) throw VerificationFailure("x^4 + b does not divide the binomial excess");
    for (const auto& c : div.quotient)
      if (ring.valuation(c) < 1) throw VerificationFailure("binomial quotient is not divisible by p");
    wit.theta = poly_divide_by_p_power(ring, div.quotient, 1);
    Poly rebuilt = poly_mul(ring, poly_mul(ring, pee, base), wit.theta);
    if (rebuilt != excess) throw VerificationFailure("p (x^4+b) theta does not reproduce the excess");
    return wit;
  }

  for (const auto& c : excess)
    if (ring.valuation(c) < 1) throw VerificationFailure("binomial excess is not divisible by 2");
  wit.alpha_n = poly_divide_by_p_power(ring, excess, 1);
  if (poly_mul(ring, pee, wit.alpha_n) != excess) throw VerificationFailure("2 alpha_n does not reproduce the excess");
  Poly lead = poly_pow(ring, poly_monomial(ring, b, 4), pn / 2);
  Poly diff = poly_sub(ring, wit.alpha_n, lead);
  for (const auto& c : diff)
    if (ring.valuation(c) < 1) throw VerificationFailure("alpha_n - (b x^4)^{2^{n-1}} is not divisible by 2");
  wit.beta_n = poly_divide_by_p_power(ring, diff, 1);
  Poly rebuilt = poly_add(ring, lead, poly_mul(ring, pee, wit.beta_n));
  if (poly_mul(ring, pee, rebuilt) != excess)
    throw VerificationFailure("2((b x^4)^{2^{n-1}} + 2 beta_n) does not reproduce the excess");
  // Type (1) shift constant 1 + 2 for the ambient quotient.
  GrElement lambda = ring.from_int(3);
  wit.alpha_unit = detail::unit_in_char2_quotient(ring, wit.alpha_n, lambda, 4 * pn);
  if (!wit.alpha_unit) throw VerificationFailure("alpha_n is not a unit");
  return wit;
}

}  // namespace grcodes

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

// Square lambda = delta^2: R = GR[x]/<x^{2p^s} - delta> x GR[x]/<x^{2p^s} + delta>.

#pragma once

#include <memory>
#include <optional>
#include <utility>

#include "grcodes/codes.hpp"

namespace grcodes {

using ComponentPtr = std::shared_ptr<const ConstacyclicRing>;

class CrtSplit {
 public:
  // delta defaults to the square root of lambda with the smallest index.
  static CrtSplit make(RingPtr ring, const GrElement& lambda, unsigned s,
                       std::optional<GrElement> delta = std::nullopt) {
    if (ring->p() == 2) throw PreconditionError("the CRT split needs p odd so that 2 is a unit");
    if (!delta) delta = find_square_root(*ring, lambda);
    if (!delta) throw PreconditionError("lambda = " + lambda.str() + " is not a square");
    if (ring->mul(*delta, *delta) != lambda) throw PreconditionError("delta^2 != lambda");
    return CrtSplit(std::move(ring), lambda, s, *delta);
  }

  const QuotientRing& ambient() const { return *ctx_; }
  const QuotientPtr& ambient_ptr() const { return ctx_; }
  const ConstacyclicRing& plus() const { return *plus_; }    // x^{2p^s} - delta
  const ConstacyclicRing& minus() const { return *minus_; }  // x^{2p^s} + delta
  const GrElement& delta() const { return delta_; }
  const QrElement& e1() const { return e1_; }
  const QrElement& e2() const { return e2_; }

  std::pair<QrElement, QrElement> split(const QrElement& c) const {
    Poly f = ctx_->to_poly(c);
    return {plus_->from_poly(f), minus_->from_poly(f)};
  }
  QrElement join(const QrElement& c1, const QrElement& c2) const {
    QrElement a = ctx_->from_poly(plus_->to_poly(c1));
    QrElement b = ctx_->from_poly(minus_->to_poly(c2));
    return ctx_->add(ctx_->mul(a, e1_), ctx_->mul(b, e2_));
  }

  bool idempotents_ok() const {
    const QuotientRing& R = *ctx_;
    return R.mul(e1_, e1_) == e1_ && R.mul(e2_, e2_) == e2_ && R.mul(e1_, e2_).is_zero() &&
           R.add(e1_, e2_) == R.one();
  }

 private:
  CrtSplit(RingPtr ring, const GrElement& lambda, unsigned s, GrElement delta)
      : ctx_(QuotientRing::make(ring, lambda, s, QuotientMode::Generic)), delta_(std::move(delta)) {
    const std::size_t half = ctx_->n() / 2;
    plus_ = std::make_shared<const ConstacyclicRing>(ring, half, delta_);
    minus_ = std::make_shared<const ConstacyclicRing>(ring, half, ring->neg(delta_));
    // e1 = (2 delta)^{-1} (x^{2p^s} + delta)
    GrElement inv2d = ring->inv(ring->scale(2, delta_));
    Poly f = poly_monomial(*ring, ring->one(), half);
    f[0] = delta_;
    e1_ = ctx_->scale(inv2d, ctx_->from_poly(f));
    e2_ = ctx_->sub(ctx_->one(), e1_);
  }

  QuotientPtr ctx_;
  GrElement delta_;
  ComponentPtr plus_;
  ComponentPtr minus_;
  QrElement e1_;
  QrElement e2_;
};

// The ideal <g> of a component ring.
struct ComponentCode {
  const ConstacyclicRing* ring;
  QrElement generator;

  std::vector<WordVector> spanning_rows() const { return ideal_spanning_rows(*ring, generator); }
  std::uint64_t log_cardinality() const { return ideal_echelon(*ring, generator).log_cardinality(); }
};

struct DirectSumCheck {
  std::uint64_t log_sum = 0;         // log_p |C1 + C2| in R
  std::uint64_t log_components = 0;  // log_p |C1| + log_p |C2|
  DualCheck component1_dual;
  DualCheck component2_dual;
  DualCheck sum_dual;
  bool pass() const {
    return log_sum == log_components && component1_dual.pass() && component2_dual.pass() && sum_dual.pass();
  }
};

// For C = C1 + C2 over lambda and D = D1 + D2 over lambda^{-1} (split by
// delta^{-1}): checks |C| = |C1||C2|, D_k = C_k^perp, and D = C^perp.
inline DirectSumCheck check_direct_sum(const CrtSplit& split, const CrtSplit& dual_split,
                                       const QrElement& g1, const QrElement& g2,
                                       const QrElement& h1, const QrElement& h2) {
  const GaloisRing& ring = split.ambient().ring();
  ComponentCode c1{&split.plus(), g1}, c2{&split.minus(), g2};
  ComponentCode d1{&dual_split.plus(), h1}, d2{&dual_split.minus(), h2};
  QrElement sum_gen = split.join(g1, g2);
  QrElement dual_gen = dual_split.join(h1, h2);
  DirectSumCheck out;
  out.log_sum = ideal_echelon(split.ambient(), sum_gen).log_cardinality();
  out.log_components = c1.log_cardinality() + c2.log_cardinality();
  out.component1_dual = verify_dual(ring, split.plus().n(), c1.spanning_rows(), d1.spanning_rows());
  out.component2_dual = verify_dual(ring, split.minus().n(), c2.spanning_rows(), d2.spanning_rows());
  out.sum_dual = verify_dual(ring, split.ambient().n(), ideal_spanning_rows(split.ambient(), sum_gen),
                             ideal_spanning_rows(dual_split.ambient(), dual_gen));
  return out;
}

}  // namespace grcodes

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

// The codes <(x^4 - alpha)^i> of length 4p^s: construction, counting,
// enumeration, duals, self-duality and multi-constacyclicity.

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "grcodes/linear_code.hpp"
#include "grcodes/quotient_ring.hpp"

namespace grcodes {

// x^r * gen for r < n: a spanning set of the ideal <gen>.
inline std::vector<WordVector> ideal_spanning_rows(const ConstacyclicRing& ctx, const QrElement& gen) {
  std::vector<WordVector> rows;
  rows.reserve(ctx.n());
  QrElement cur = gen;
  for (std::size_t r = 0; r < ctx.n(); ++r) {
    rows.push_back(cur.data());
    cur = ctx.shift(cur);
  }
  return rows;
}

inline EchelonBasis ideal_echelon(const ConstacyclicRing& ctx, const QrElement& gen) {
  return echelon_form(ctx.ring(), ctx.n(), ideal_spanning_rows(ctx, gen));
}

struct ChainCode {
  QuotientPtr ctx;
  std::size_t i = 0;
  QrElement generator;

  const QuotientRing& ring() const { return *ctx; }
  std::size_t n() const { return ctx->n(); }
  bool is_zero_code() const { return i == ctx->nilpotency(); }
  bool is_whole_ring() const { return i == 0; }
  // p^{4m(a p^s - i)}
  PrimePower cardinality() const {
    return {ctx->ring().p(), 4ull * ctx->ring().m() * (ctx->nilpotency() - i)};
  }
  bool contains(const QrElement& f) const { return ctx->valuation(f) >= i; }
  std::vector<WordVector> spanning_rows() const { return ideal_spanning_rows(*ctx, generator); }
};

inline ChainCode build_chain_code(QuotientPtr ctx, std::size_t i) {
  if (!ctx->is_chain()) throw PreconditionError("chain codes need a chain-mode quotient ring");
  if (i > ctx->nilpotency())
    throw PreconditionError("exponent i = " + std::to_string(i) + " exceeds a p^s = " +
                            std::to_string(ctx->nilpotency()));
  QrElement gen = ctx->g_power(i);
  return ChainCode{std::move(ctx), i, std::move(gen)};
}

inline EchelonBasis echelon_basis(const ChainCode& code) { return ideal_echelon(*code.ctx, code.generator); }

inline void require_budget(const PrimePower& size, std::uint64_t budget) {
  if (size.value() > budget)
    throw BudgetExceeded("code has " + size.str() + " codewords, above the budget of " + std::to_string(budget));
}

template <class Visitor>
void visit_codewords(const ChainCode& code, std::uint64_t budget, Visitor&& visit) {
  EchelonBasis basis = echelon_basis(code);
  require_budget(basis.cardinality(), budget);
  for_each_codeword(basis, visit);
}

inline std::vector<QrElement> enumerate_codewords(const ChainCode& code, std::uint64_t budget) {
  std::vector<QrElement> out;
  visit_codewords(code, budget, [&](const WordVector& w) { out.emplace_back(code.ctx.get(), w); });
  return out;
}

// The dual of <(x^4-alpha)^i> over lambda is <(x^4-alpha^{-1})^{ap^s-i}>
// over lambda^{-1}.
inline ChainCode dual_descriptor(const ChainCode& code) {
  const QuotientRing& R = *code.ctx;
  const GaloisRing& ring = R.ring();
  QuotientPtr dual_ctx =
      QuotientRing::make(R.ring_ptr(), ring.inv(R.lambda()), R.s(), QuotientMode::Chain, R.forced());
  if (dual_ctx->alpha() != ring.inv(R.alpha())) throw VerificationFailure("dual alpha is not alpha^{-1}");
  return build_chain_code(std::move(dual_ctx), R.nilpotency() - code.i);
}

struct DualCheck {
  bool orthogonal = false;
  std::uint64_t log_code = 0;
  std::uint64_t log_claimed = 0;
  std::uint64_t log_ambient = 0;  // log_p |GR|^n
  bool pass() const { return orthogonal && log_code + log_claimed == log_ambient; }
};

inline bool rows_orthogonal(const GaloisRing& ring, const std::vector<WordVector>& xs,
                            const std::vector<WordVector>& ys) {
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (!inner_product(ring, x, y).is_zero()) return false;
  return true;
}

// Orthogonality of the spanning sets plus |C| |D| = |GR|^n certifies D = C^perp.
inline DualCheck verify_dual(const GaloisRing& ring, std::size_t n, const std::vector<WordVector>& code_rows,
                             const std::vector<WordVector>& claimed_rows) {
  DualCheck out;
  out.orthogonal = rows_orthogonal(ring, code_rows, claimed_rows);
  out.log_code = echelon_form(ring, n, code_rows).log_cardinality();
  out.log_claimed = echelon_form(ring, n, claimed_rows).log_cardinality();
  out.log_ambient = static_cast<std::uint64_t>(ring.a()) * ring.m() * n;
  return out;
}

inline DualCheck verify_dual(const ChainCode& code, const ChainCode& claimed) {
  if (code.n() != claimed.n() || !code.ctx->ring().same_as(claimed.ctx->ring())) throw ContextMismatch();
  return verify_dual(code.ctx->ring(), code.n(), code.spanning_rows(), claimed.spanning_rows());
}

inline bool xi0_self_inverse(const QuotientRing& R) {
  const GaloisRing& ring = R.ring();
  return ring.mul(R.profile().xi0, R.profile().xi0).is_one();
}

// C is self-orthogonal iff ceil(ap^s/2) <= i when xi0 = xi0^{-1}, and
// iff ceil(a/2) p^s <= i otherwise.
inline bool self_orthogonal_formula(const ChainCode& code) {
  const QuotientRing& R = *code.ctx;
  const std::size_t N = R.nilpotency();
  if (xi0_self_inverse(R)) return (N + 1) / 2 <= code.i;
  return (R.ring().a() + 1) / 2 * R.ps() <= code.i;
}

inline bool self_orthogonal_bruteforce(const ChainCode& code) {
  auto rows = code.spanning_rows();
  return rows_orthogonal(code.ctx->ring(), rows, rows);
}

inline std::vector<ChainCode> self_dual_enumerate(const QuotientPtr& ctx) {
  const std::size_t N = ctx->nilpotency();
  const unsigned a = ctx->ring().a();
  std::vector<ChainCode> out;
  if (xi0_self_inverse(*ctx)) {
    if (N % 2 == 0) out.push_back(build_chain_code(ctx, N / 2));
  } else if (a % 2 == 0) {
    out.push_back(build_chain_code(ctx, a / 2 * ctx->ps()));
  }
  return out;
}

enum class MultiMethod { Enumeration, Closure };

// Whether <(x^4-alpha)^i> is the same set of words over lambda1 and lambda2.
inline bool multi_constacyclic_equal(const QuotientPtr& ctx1, const QuotientPtr& ctx2, std::size_t i,
                                     std::uint64_t budget, MultiMethod* used = nullptr) {
  const GaloisRing& ring = ctx1->ring();
  if (!ring.same_as(ctx2->ring()) || ctx1->s() != ctx2->s()) throw ContextMismatch();
  if (ctx1->profile().xi0 != ctx2->profile().xi0)
    throw PreconditionError("multi-constacyclic comparison needs units with the same xi0");
  ChainCode c1 = build_chain_code(ctx1, i);
  ChainCode c2 = build_chain_code(ctx2, i);
  if (c1.cardinality().value() <= budget) {
    if (used) *used = MultiMethod::Enumeration;
    auto collect = [&](const ChainCode& c) {
      std::vector<WordVector> words;
      visit_codewords(c, budget, [&](const WordVector& w) { words.push_back(w); });
      std::sort(words.begin(), words.end());
      return words;
    };
    return collect(c1) == collect(c2);
  }
  if (used) *used = MultiMethod::Closure;
  // Each code must be stable under the other constant's shift.
  auto stable = [](const ChainCode& host, const QuotientRing& other) {
    for (const auto& row : host.spanning_rows()) {
      QrElement shifted = other.shift(QrElement(&other, row));
      if (!host.contains(host.ctx->adopt(shifted))) return false;
    }
    return true;
  };
  return echelon_basis(c1).log_cardinality() == echelon_basis(c2).log_cardinality() && stable(c1, *ctx2) &&
         stable(c2, *ctx1);
}

// One class of Type (1) constacyclic codes per nonzero xi0.
inline Word count_type1_classes(const GaloisRing& ring) {
  if (ring.a() < 2) throw PreconditionError("Type (1) units need a >= 2");
  return ring.residue_size() - 1;
}

// Groups all Type (1) units by xi0; keys are discrete logs of xi0.
inline std::map<std::size_t, std::size_t> type1_classes_by_grouping(const GaloisRing& ring) {
  std::map<std::size_t, std::size_t> groups;
  for (Word idx = 0; idx < ring.size(); ++idx) {
    GrElement x = ring.element(idx);
    if (!ring.is_unit(x)) continue;
    UnitProfile prof = ring.classify_unit(x);
    if (prof.kind == UnitKind::Type1) ++groups[ring.dlog(prof.xi0)];
  }
  return groups;
}

}  // namespace grcodes

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

// Echelon spanning sets and codeword enumeration for linear codes over the
// chain ring GR(p^a, m).

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grcodes/galois_ring.hpp"

namespace grcodes {

using WordVector = std::vector<Word>;

struct EchelonRow {
  WordVector v;        // len * m words
  std::size_t pivot;    // highest nonzero coordinate
  unsigned valuation;   // the pivot entry equals p^valuation
};

// Rows with strictly decreasing pivots. The span of the rows with pivot
// below j is exactly the set of codewords supported on [0, j).
class EchelonBasis {
 public:
  EchelonBasis(const GaloisRing* ring, std::size_t len) : ring_(ring), len_(len) {}

  const GaloisRing& ring() const { return *ring_; }
  std::size_t length() const { return len_; }
  const std::vector<EchelonRow>& rows() const { return rows_; }
  std::vector<EchelonRow>& mutable_rows() { return rows_; }

  // log_p |C| = sum over rows of m (a - v).
  std::uint64_t log_cardinality() const { return log_prefix_cardinality(len_); }
  PrimePower cardinality() const { return {ring_->p(), log_cardinality()}; }
  std::uint64_t log_prefix_cardinality(std::size_t j) const {
    std::uint64_t e = 0;
    for (const auto& r : rows_)
      if (r.pivot < j) e += static_cast<std::uint64_t>(ring_->m()) * (ring_->a() - r.valuation);
    return e;
  }

 private:
  const GaloisRing* ring_;
  std::size_t len_;
  std::vector<EchelonRow> rows_;
};

namespace detail {

inline std::optional<std::size_t> highest_nonzero(const GaloisRing& ring, std::span<const Word> v) {
  const unsigned m = ring.m();
  for (std::size_t k = v.size() / m; k-- > 0;)
    if (!ring.is_zero_block(v.data() + k * m)) return k;
  return std::nullopt;
}

// v <- v - c * u
inline void axpy_sub(const GaloisRing& ring, const Word* c, std::span<const Word> u, std::span<Word> v) {
  const unsigned m = ring.m();
  std::array<Word, kMaxDegree> t{};
  for (std::size_t k = 0; k < v.size(); k += m) {
    if (ring.is_zero_block(u.data() + k)) continue;
    ring.mul_into(c, u.data() + k, t.data());
    ring.sub_into(v.data() + k, t.data(), v.data() + k);
  }
}

inline void scale_in_place(const GaloisRing& ring, const Word* c, std::span<Word> v) {
  for (std::size_t k = 0; k < v.size(); k += ring.m()) ring.mul_into(c, v.data() + k, v.data() + k);
}

}  // namespace detail

// Chain-ring elimination from the highest coordinate down. At each column
// the entry of least valuation v becomes the pivot p^v; the other rows are
// cleared in that column, and p^{a-v} times the pivot row (which vanishes
// in the column) is returned to the pool.
inline EchelonBasis echelon_form(const GaloisRing& ring, std::size_t len, std::vector<WordVector> pool) {
  const unsigned m = ring.m();
  const unsigned a = ring.a();
  EchelonBasis basis(&ring, len);
  std::erase_if(pool, [&](const WordVector& v) { return !detail::highest_nonzero(ring, v); });
  for (std::size_t col = len; col-- > 0 && !pool.empty();) {
    std::size_t best = pool.size();
    unsigned best_val = a;
    for (std::size_t r = 0; r < pool.size(); ++r) {
      unsigned v = ring.valuation_block(pool[r].data() + col * m);
      if (v < best_val) {
        best_val = v;
        best = r;
      }
    }
    if (best == pool.size()) continue;
    WordVector row = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    GrElement entry = ring.from_words({row.data() + col * m, m});
    GrElement unit = ring.divide_by_p_power(entry, best_val);
    GrElement unit_inv = ring.inv(unit);
    detail::scale_in_place(ring, unit_inv.coeffs().data(), row);
    for (auto& other : pool) {
      GrElement t = ring.from_words({other.data() + col * m, m});
      if (t.is_zero()) continue;
      GrElement factor = ring.divide_by_p_power(t, best_val);
      detail::axpy_sub(ring, factor.coeffs().data(), row, other);
    }
    if (best_val > 0) {
      WordVector back = row;
      GrElement mult = ring.from_int(static_cast<std::int64_t>(checked_pow(ring.p(), a - best_val)));
      detail::scale_in_place(ring, mult.coeffs().data(), back);
      pool.push_back(std::move(back));
    }
    std::erase_if(pool, [&](const WordVector& v) { return !detail::highest_nonzero(ring, v); });
    basis.mutable_rows().push_back({std::move(row), col, best_val});
  }
  return basis;
}

// Visits every codeword exactly once. A row with pivot valuation v is
// multiplied by sum_{d < a-v} p^d t_d with Teichmuller digits t_d, a
// transversal of GR / p^{a-v} GR. With parts > 1 only the codewords whose
// first digit index is congruent to `part` are visited.
template <class Visitor>
void for_each_codeword(const EchelonBasis& basis, Visitor&& visit, std::size_t part = 0, std::size_t parts = 1) {
  const GaloisRing& ring = basis.ring();
  const std::size_t width = basis.length() * ring.m();
  const auto& teich = ring.teichmuller();
  const std::size_t radix = teich.size();
  // One slot per (row, digit); deltas[slot][k] = p^d teich[k] * row.
  std::vector<std::vector<WordVector>> deltas;
  for (const auto& row : basis.rows()) {
    for (unsigned d = 0; d < ring.a() - row.valuation; ++d) {
      std::vector<WordVector> options;
      for (const auto& t : teich) {
        GrElement c = ring.times_p_power(t, d);
        WordVector v = row.v;
        detail::scale_in_place(ring, c.coeffs().data(), v);
        options.push_back(std::move(v));
      }
      deltas.push_back(std::move(options));
    }
  }
  WordVector word(width, 0);
  if (deltas.empty()) {
    if (part == 0) visit(std::as_const(word));
    return;
  }
  std::vector<std::size_t> digit(deltas.size(), 0);
  auto apply = [&](std::size_t slot, std::size_t from, std::size_t to) {
    const WordVector& old_v = deltas[slot][from];
    const WordVector& new_v = deltas[slot][to];
    for (std::size_t k = 0; k < width; k += ring.m()) {
      ring.sub_into(word.data() + k, old_v.data() + k, word.data() + k);
      ring.add_into(word.data() + k, new_v.data() + k, word.data() + k);
    }
  };
  const std::size_t lead = 0;
  for (std::size_t first = part; first < radix; first += parts) {
    apply(lead, digit[lead], first);
    digit[lead] = first;
    while (true) {
      visit(std::as_const(word));
      std::size_t slot = deltas.size() - 1;
      while (slot > lead && digit[slot] + 1 == radix) {
        apply(slot, digit[slot], 0);
        digit[slot] = 0;
        --slot;
      }
      if (slot == lead) break;
      apply(slot, digit[slot], digit[slot] + 1);
      ++digit[slot];
    }
  }
}

}  // namespace grcodes

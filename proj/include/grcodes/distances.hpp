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

// Rosenbloom-Tsfasman and Hamming distances and RT weight distributions.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grcodes/codes.hpp"

namespace grcodes {

enum class Metric { RT, Hamming };
enum class Method { Formula, Bruteforce };

inline const char* metric_name(Metric m) { return m == Metric::RT ? "RT" : "Hamming"; }
inline const char* method_name(Method m) { return m == Method::Formula ? "formula" : "bruteforce"; }

struct HammingParams {
  unsigned beta0 = 0;
  unsigned tau0 = 0;
};

struct DistanceReport {
  Metric metric = Metric::RT;
  std::size_t value = 0;
  Method method = Method::Formula;
  std::size_t i = 0;
  Word p = 0;
  unsigned a = 0;
  unsigned m = 0;
  unsigned s = 0;
  std::optional<HammingParams> located;
};

// A[j] = number of codewords of RT weight j, 0 <= j <= n.
using RtDistribution = std::vector<BigInt>;

inline std::size_t rt_weight(std::span<const Word> v, unsigned m) {
  for (std::size_t k = v.size() / m; k-- > 0;)
    for (unsigned t = 0; t < m; ++t)
      if (v[k * m + t] != 0) return k + 1;
  return 0;
}
inline std::size_t rt_weight(const QrElement& c) { return rt_weight(c.data(), c.ctx().m()); }

inline std::size_t hamming_weight(std::span<const Word> v, unsigned m) {
  std::size_t w = 0;
  for (std::size_t k = 0; k < v.size(); k += m)
    for (unsigned t = 0; t < m; ++t)
      if (v[k + t] != 0) {
        ++w;
        break;
      }
  return w;
}
inline std::size_t hamming_weight(const QrElement& c) { return hamming_weight(c.data(), c.ctx().m()); }

namespace detail {

inline DistanceReport blank_report(const ChainCode& code, Metric metric, Method method) {
  const GaloisRing& ring = code.ctx->ring();
  DistanceReport r;
  r.metric = metric;
  r.method = method;
  r.i = code.i;
  r.p = ring.p();
  r.a = ring.a();
  r.m = ring.m();
  r.s = code.ctx->s();
  return r;
}

// (p^x - 1) p^y
inline BigInt pm1_times(Word p, std::uint64_t x, std::uint64_t y) { return (big_pow(p, x) - 1) * big_pow(p, y); }

}  // namespace detail

// 0 for the zero code, 1 for i <= (a-1)p^s, else 4i - 4(a-1)p^s + 1.
inline DistanceReport d_rt_formula(const ChainCode& code) {
  DistanceReport r = detail::blank_report(code, Metric::RT, Method::Formula);
  const std::size_t low = (r.a - 1) * code.ctx->ps();
  if (code.is_zero_code())
    r.value = 0;
  else if (code.i <= low)
    r.value = 1;
  else
    r.value = 4 * code.i - 4 * low + 1;
  return r;
}

// Minimum over nonzero codewords; 0 for the zero code.
template <class WeightFn>
std::size_t min_weight_bruteforce(const ChainCode& code, std::uint64_t budget, WeightFn weight) {
  const unsigned m = code.ctx->m();
  std::size_t best = 0;
  visit_codewords(code, budget, [&](const WordVector& w) {
    std::size_t wt = weight(std::span<const Word>(w), m);
    if (wt != 0 && (best == 0 || wt < best)) best = wt;
  });
  return best;
}

inline DistanceReport d_rt_bruteforce(const ChainCode& code, std::uint64_t budget) {
  DistanceReport r = detail::blank_report(code, Metric::RT, Method::Bruteforce);
  r.value = min_weight_bruteforce(code, budget, [](std::span<const Word> v, unsigned m) { return rt_weight(v, m); });
  return r;
}

inline DistanceReport d_h_bruteforce(const ChainCode& code, std::uint64_t budget) {
  DistanceReport r = detail::blank_report(code, Metric::Hamming, Method::Bruteforce);
  r.value =
      min_weight_bruteforce(code, budget, [](std::span<const Word> v, unsigned m) { return hamming_weight(v, m); });
  return r;
}

namespace detail {

// Every (beta0, tau0) whose bracket contains i, for (a-1)p^s < i < ap^s.
inline std::vector<HammingParams> hamming_brackets(Word p, unsigned a, unsigned s, std::size_t i) {
  std::vector<HammingParams> hits;
  const Word ps = checked_pow(p, s);
  const std::size_t N = a * ps;
  for (unsigned tau = 0; tau < s; ++tau) {
    const Word big = checked_pow(p, s - tau);
    const Word small = checked_pow(p, s - tau - 1);
    for (unsigned beta = 0; beta + 2 <= p; ++beta) {
      std::size_t lo = N - big + beta * small + 1;
      std::size_t hi = N - big + (beta + 1) * small;
      if (lo <= i && i <= hi) hits.push_back({beta, tau});
    }
  }
  return hits;
}

}  // namespace detail

// 1 for i <= (a-1)p^s, 0 for the zero code, otherwise (beta0 + 2) p^{tau0}
// for the unique bracket containing i. The brackets are checked to tile
// ((a-1)p^s, ap^s) before use.
inline DistanceReport d_h_formula(const ChainCode& code) {
  const QuotientRing& R = *code.ctx;
  if (R.ring().p() == 2) throw PreconditionError("the Hamming distance formula needs p odd");
  if (R.forced()) throw PreconditionError("the Hamming distance formula needs x^4 - alpha irreducible mod p");
  DistanceReport r = detail::blank_report(code, Metric::Hamming, Method::Formula);
  const std::size_t low = (r.a - 1) * R.ps();
  const std::size_t N = R.nilpotency();
  for (std::size_t i = low + 1; i < N; ++i)
    if (detail::hamming_brackets(r.p, r.a, r.s, i).size() != 1)
      throw VerificationFailure("Hamming brackets do not tile at i = " + std::to_string(i));
  if (code.i <= low) {
    r.value = 1;
  } else if (code.is_zero_code()) {
    r.value = 0;
  } else {
    HammingParams hp = detail::hamming_brackets(r.p, r.a, r.s, code.i).front();
    r.located = hp;
    r.value = (hp.beta0 + 2) * checked_pow(r.p, hp.tau0);
  }
  return r;
}

// p^{a-1} lies in every C_i with i <= (a-1)p^s and has RT and Hamming
// weight 1.
inline std::optional<QrElement> weight_one_witness(const ChainCode& code) {
  const QuotientRing& R = *code.ctx;
  QrElement c = R.constant(R.ring().from_int(static_cast<std::int64_t>(checked_pow(R.ring().p(), R.ring().a() - 1))));
  if (!code.contains(c)) return std::nullopt;
  return c;
}

// Closed form with index ranges rebuilt from the B_j + C_j decomposition.
// For i = (b-1)p^s + j' with 1 <= j' < p^s and k = a - b:
//   A_j = (p^{mk} - 1) p^{mk(j-1)}                      for 1 <= j <= 4j',
//   A_j = (p^{m(k+1)} - 1) p^{mk(j-1) + m(j-4j'-1)}     for 4j' < j <= 4p^s.
inline RtDistribution rt_distribution_formula(const ChainCode& code) {
  const QuotientRing& R = *code.ctx;
  const Word p = R.ring().p();
  const std::uint64_t m = R.ring().m();
  const std::uint64_t a = R.ring().a();
  const std::size_t n = R.n();
  const std::size_t ps = R.ps();
  const std::size_t i = code.i;
  RtDistribution A(n + 1, 0);
  A[0] = 1;
  if (code.is_zero_code()) return A;
  if (i % ps == 0) {
    const std::uint64_t t = i / ps;
    for (std::size_t j = 1; j <= n; ++j) A[j] = detail::pm1_times(p, m * (a - t), m * (a - t) * (j - 1));
    return A;
  }
  if (i > (a - 1) * ps) {
    const std::size_t start = 4 * i - 4 * (a - 1) * ps + 1;
    for (std::size_t t = 0; start + t <= n; ++t) A[start + t] = detail::pm1_times(p, m, m * t);
    return A;
  }
  const std::uint64_t b = i / ps + 1;
  const std::size_t jp = i - (b - 1) * ps;
  const std::uint64_t k = a - b;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j <= 4 * jp)
      A[j] = detail::pm1_times(p, m * k, m * k * (j - 1));
    else
      A[j] = detail::pm1_times(p, m * (k + 1), m * k * (j - 1) + m * (j - 4 * jp - 1));
  }
  return A;
}

// The closed form exactly as printed, keyed by (possibly out of range)
// weight index; the first matching row wins.
inline std::map<long, BigInt> rt_distribution_printed(const ChainCode& code) {
  const QuotientRing& R = *code.ctx;
  const Word p = R.ring().p();
  const long m = R.ring().m();
  const long a = R.ring().a();
  const long ps = static_cast<long>(R.ps());
  const long i = static_cast<long>(code.i);
  std::map<long, BigInt> A;
  A[0] = 1;
  auto pw = [&](long e) { return e < 0 ? BigInt(0) : big_pow(p, static_cast<std::uint64_t>(e)); };
  if (code.is_zero_code()) return A;
  if (i % ps == 0) {
    const long t = i / ps;
    for (long j = 1; j <= 4 * a * ps; ++j) A[j] = (pw(m * (a - t)) - 1) * pw(m * (a - t) * (j - 1));
    return A;
  }
  if (i > (a - 1) * ps) {
    for (long j = 1; j <= 4 * i - 4 * (a - 1) * ps; ++j) A[j] = 0;
    for (long t = 0; t <= 4 * a * ps - 4 * i - 1; ++t) {
      long j = 4 * i - 4 * (a - 1) * ps + 1 + t;
      if (!A.count(j)) A[j] = (pw(m) - 1) * pw(m * t);
    }
    return A;
  }
  const long b = i / ps + 1;
  for (long j = 1; j <= 4 * i - (b - 1) * ps; ++j) A[j] = (pw(m * (a - b)) - 1) * pw(m * (a - b) * (j - 1));
  for (long t = 0; t <= 4 * a * ps - 4 * i - 1; ++t) {
    long j = 4 * i - 4 * (a - 1) * ps + 1 + t;
    if (!A.count(j))
      A[j] = pw(4 * m * (a - b) * ps) * (pw(m) - 1) * pw(m * t) + (pw(m * (a - b)) - 1) * pw(m * (a - b) * (j - 1));
  }
  return A;
}

inline BigInt distribution_total(const RtDistribution& A) {
  BigInt s = 0;
  for (const auto& x : A) s += x;
  return s;
}

inline BigInt distribution_total(const std::map<long, BigInt>& A) {
  BigInt s = 0;
  for (const auto& [j, x] : A) s += x;
  return s;
}

inline RtDistribution rt_distribution_enumerated(const ChainCode& code, std::uint64_t budget) {
  const unsigned m = code.ctx->m();
  std::vector<std::uint64_t> counts(code.n() + 1, 0);
  visit_codewords(code, budget, [&](const WordVector& w) { ++counts[rt_weight(w, m)]; });
  return RtDistribution(counts.begin(), counts.end());
}

// A_j = N_j - N_{j-1} with N_j = |{c in C : supp c in [0, j)}| read off the
// echelon pivots.
inline RtDistribution rt_distribution_structural(const ChainCode& code) {
  EchelonBasis basis = echelon_basis(code);
  const Word p = code.ctx->ring().p();
  RtDistribution A(code.n() + 1, 0);
  A[0] = 1;
  for (std::size_t j = 1; j <= code.n(); ++j)
    A[j] = big_pow(p, basis.log_prefix_cardinality(j)) - big_pow(p, basis.log_prefix_cardinality(j - 1));
  return A;
}

// Enumeration when |C| fits the budget, structural counting otherwise.
inline RtDistribution rt_distribution_oracle(const ChainCode& code, std::uint64_t budget,
                                             bool* enumerated = nullptr) {
  bool small = code.cardinality().value() <= budget;
  if (enumerated) *enumerated = small;
  return small ? rt_distribution_enumerated(code, budget) : rt_distribution_structural(code);
}

}  // namespace grcodes

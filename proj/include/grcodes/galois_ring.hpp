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

// Exact arithmetic in the Galois ring GR(p^a, m) = Z_{p^a}[u] / <f(u)>,
// Teichmuller digits, and unit classification.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "grcodes/common.hpp"

namespace grcodes {

class GaloisRing;
using RingPtr = std::shared_ptr<const GaloisRing>;

// An element c_0 + c_1 u + ... + c_{m-1} u^{m-1} with every c_k in [0, p^a).
// Elements refer to their ring by address; the ring must outlive them.
class GrElement {
 public:
  using Coeffs = boost::container::small_vector<Word, 4>;

  GrElement() = default;
  GrElement(const GaloisRing* ring, Coeffs coeffs) : ring_(ring), c_(std::move(coeffs)) {}

  const GaloisRing& ring() const { return *ring_; }
  const GaloisRing* ring_ptr() const { return ring_; }
  std::span<const Word> coeffs() const { return {c_.data(), c_.size()}; }
  std::span<Word> mutable_coeffs() { return {c_.data(), c_.size()}; }
  Word operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Word w) { return w == 0; });
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](Word w) { return w == 0; });
  }

  friend bool operator==(const GrElement& x, const GrElement& y) {
    return x.ring_ == y.ring_ && std::equal(x.c_.begin(), x.c_.end(), y.c_.begin(), y.c_.end());
  }

  inline GrElement operator+(const GrElement& y) const;
  inline GrElement operator-(const GrElement& y) const;
  inline GrElement operator*(const GrElement& y) const;
  inline GrElement operator-() const;

  std::string str() const;

 private:
  const GaloisRing* ring_ = nullptr;
  Coeffs c_;
};

enum class UnitKind { Type0, Type1 };

// lambda = xi0 + p*xi1 + p^2*z with xi0, xi1 Teichmuller representatives.
struct UnitProfile {
  UnitKind kind = UnitKind::Type0;
  GrElement xi0;
  GrElement xi1;
  GrElement z;
};

struct TeichDigits {
  std::vector<GrElement> digits;
};

// Which product bound to use in the closed-form unit inverses. The printed
// form starts the product at j = 0 and collapses to the leading factor.
enum class InverseVariant { Corrected, Printed };

class GaloisRing {
 public:
  // Builds GR(p^a, m). Without a modulus the lexicographically smallest
  // (constant term first) monic irreducible of degree m over F_p is used.
  static RingPtr make(Word p, unsigned a, unsigned m,
                      std::optional<std::vector<Word>> modulus = std::nullopt) {
    return RingPtr(new GaloisRing(p, a, m, std::move(modulus)));
  }

  GaloisRing(const GaloisRing&) = delete;
  GaloisRing& operator=(const GaloisRing&) = delete;

  Word p() const { return p_; }
  unsigned a() const { return a_; }
  unsigned m() const { return m_; }
  Word q() const { return q_; }
  Word residue_size() const { return residue_size_; }
  // p^{am}
  Word size() const { return size_; }
  const std::vector<Word>& modulus() const { return f_; }

  // F_{p^m} realized as GR(p, m) with the reduced modulus.
  const GaloisRing& residue_field() const { return residue_ ? *residue_ : *this; }

  bool same_as(const GaloisRing& other) const {
    return this == &other || (p_ == other.p_ && a_ == other.a_ && f_ == other.f_);
  }

  // --- construction of elements -------------------------------------------

  GrElement zero() const { return GrElement(this, GrElement::Coeffs(m_, 0)); }
  GrElement one() const { return from_int(1); }
  GrElement from_int(std::int64_t v) const {
    GrElement::Coeffs c(m_, 0);
    c[0] = reduce_signed(v);
    return GrElement(this, std::move(c));
  }
  // Constant-term-first coefficient list; missing entries are zero.
  GrElement from_coeffs(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > m_) throw PreconditionError("element has more than m coefficients");
    GrElement::Coeffs c(m_, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = reduce_signed(coeffs[k]);
    return GrElement(this, std::move(c));
  }
  GrElement from_coeffs(std::initializer_list<std::int64_t> coeffs) const {
    return from_coeffs(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
  }
  GrElement from_words(std::span<const Word> w) const {
    GrElement::Coeffs c(w.begin(), w.end());
    for (auto& x : c) x %= q_;
    return GrElement(this, std::move(c));
  }
  // Index order: sum c_k q^k.
  GrElement element(Word index) const {
    GrElement::Coeffs c(m_, 0);
    for (unsigned k = 0; k < m_; ++k) {
      c[k] = index % q_;
      index /= q_;
    }
    return GrElement(this, std::move(c));
  }
  Word index_of(const GrElement& x) const {
    check(x);
    Word idx = 0;
    for (unsigned k = m_; k-- > 0;) idx = idx * q_ + x[k];
    return idx;
  }
  template <class Rng>
  GrElement random(Rng& rng) const {
    std::uniform_int_distribution<Word> dist(0, q_ - 1);
    GrElement::Coeffs c(m_);
    for (auto& x : c) x = dist(rng);
    return GrElement(this, std::move(c));
  }
  // Reinterprets the integer coefficients of an element of another ring with
  // the same degree (residue field <-> ring lifts).
  GrElement reinterpret(const GrElement& x) const {
    if (x.coeffs().size() != m_) throw ContextMismatch();
    return from_words(x.coeffs());
  }
  GrElement reduce_mod_p(const GrElement& x) const {
    check(x);
    return residue_field().from_words(x.coeffs());
  }

  // --- raw kernels over m-word blocks --------------------------------------

  void add_into(const Word* x, const Word* y, Word* out) const {
    for (unsigned k = 0; k < m_; ++k) {
      Word s = x[k] + y[k];
      out[k] = s >= q_ ? s - q_ : s;
    }
  }
  void sub_into(const Word* x, const Word* y, Word* out) const {
    for (unsigned k = 0; k < m_; ++k) out[k] = x[k] >= y[k] ? x[k] - y[k] : x[k] + q_ - y[k];
  }
  void neg_into(const Word* x, Word* out) const {
    for (unsigned k = 0; k < m_; ++k) out[k] = x[k] == 0 ? 0 : q_ - x[k];
  }
  // out may alias x or y.
  void mul_into(const Word* x, const Word* y, Word* out) const {
    if (m_ == 1) {
      out[0] = x[0] * y[0] % q_;
      return;
    }
    std::array<Word, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < m_; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % q_;
    }
    for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
      Word t = prod[k];
      if (t == 0) continue;
      Word neg_t = q_ - t;
      for (unsigned j = 0; j < m_; ++j) prod[k - m_ + j] = (prod[k - m_ + j] + neg_t * f_[j]) % q_;
      prod[k] = 0;
    }
    std::copy_n(prod.begin(), m_, out);
  }
  // out += x * y
  void mul_add_into(const Word* x, const Word* y, Word* out) const {
    if (m_ == 1) {
      out[0] = (out[0] + x[0] * y[0]) % q_;
      return;
    }
    std::array<Word, kMaxDegree> t{};
    mul_into(x, y, t.data());
    add_into(out, t.data(), out);
  }
  bool is_zero_block(const Word* x) const {
    for (unsigned k = 0; k < m_; ++k)
      if (x[k] != 0) return false;
    return true;
  }
  // Minimum p-adic valuation over the coefficients; a for zero.
  unsigned valuation_block(const Word* x) const {
    unsigned v = a_;
    for (unsigned k = 0; k < m_; ++k) {
      if (x[k] == 0) continue;
      unsigned e = 0;
      for (Word c = x[k]; c % p_ == 0; c /= p_) ++e;
      v = std::min(v, e);
    }
    return v;
  }

  // --- element arithmetic --------------------------------------------------

  GrElement add(const GrElement& x, const GrElement& y) const {
    check(x, y);
    GrElement r = zero();
    add_into(x.coeffs().data(), y.coeffs().data(), r.mutable_coeffs().data());
    return r;
  }
  GrElement sub(const GrElement& x, const GrElement& y) const {
    check(x, y);
    GrElement r = zero();
    sub_into(x.coeffs().data(), y.coeffs().data(), r.mutable_coeffs().data());
    return r;
  }
  GrElement neg(const GrElement& x) const {
    check(x);
    GrElement r = zero();
    neg_into(x.coeffs().data(), r.mutable_coeffs().data());
    return r;
  }
  GrElement mul(const GrElement& x, const GrElement& y) const {
    check(x, y);
    GrElement r = zero();
    mul_into(x.coeffs().data(), y.coeffs().data(), r.mutable_coeffs().data());
    return r;
  }
  GrElement scale(std::int64_t k, const GrElement& x) const { return mul(from_int(k), x); }
  GrElement pow(GrElement x, std::uint64_t e) const {
    check(x);
    GrElement r = one();
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  bool is_unit(const GrElement& x) const {
    check(x);
    return std::any_of(x.coeffs().begin(), x.coeffs().end(), [this](Word c) { return c % p_ != 0; });
  }
  unsigned valuation(const GrElement& x) const {
    check(x);
    return valuation_block(x.coeffs().data());
  }
  // x / p^k for x in p^k GR; the quotient has coefficients in [0, p^{a-k}).
  GrElement divide_by_p_power(const GrElement& x, unsigned k) const {
    check(x);
    Word d = checked_pow(p_, k);
    GrElement r = zero();
    for (unsigned j = 0; j < m_; ++j) {
      if (x[j] % d != 0) throw PreconditionError("element is not divisible by p^" + std::to_string(k));
      r.mutable_coeffs()[j] = x[j] / d;
    }
    return r;
  }
  GrElement times_p_power(const GrElement& x, unsigned k) const {
    return mul(from_int(static_cast<std::int64_t>(k >= a_ ? 0 : checked_pow(p_, k))), x);
  }

  // Inverts the residue in F_{p^m}, then refines with y <- y(2 - xy).
  GrElement inv(const GrElement& x) const {
    if (!is_unit(x)) throw NotInvertible("element " + x.str() + " is not a unit");
    const GaloisRing& field = residue_field();
    GrElement bar = reduce_mod_p(x);
    GrElement y = reinterpret(field.pow(bar, residue_size_ - 2));
    GrElement two = from_int(2);
    for (unsigned precision = 1; precision < a_; precision *= 2) y = mul(y, sub(two, mul(x, y)));
    if (!mul(x, y).is_one()) throw VerificationFailure("unit inverse refinement did not converge");
    return y;
  }

  // --- Teichmuller machinery -----------------------------------------------

  // [0, 1, xi, xi^2, ..., xi^{p^m - 2}]
  const std::vector<GrElement>& teichmuller() const { return teich_; }
  const GrElement& xi() const { return teich_[residue_size_ > 2 ? 2 : 1]; }
  bool is_teichmuller(const GrElement& x) const { return pow(x, residue_size_) == x; }

  // The unique Teichmuller representative congruent to x mod p, found as the
  // fixed point of y <- y^{p^m}.
  GrElement teichmuller_lift(const GrElement& x) const {
    GrElement y = x;
    for (unsigned it = 0; it <= a_ + 1; ++it) {
      GrElement next = pow(y, residue_size_);
      if (next == y) return y;
      y = std::move(next);
    }
    throw VerificationFailure("Teichmuller iteration did not reach a fixed point");
  }

  TeichDigits teich_digits(const GrElement& x) const {
    check(x);
    TeichDigits out;
    GrElement rest = x;
    for (unsigned i = 0; i < a_; ++i) {
      GrElement d = teichmuller_lift(rest);
      out.digits.push_back(d);
      if (i + 1 < a_) rest = divide_by_p_power(sub(rest, d), 1);
    }
    return out;
  }
  GrElement from_digits(std::span<const GrElement> digits) const {
    GrElement r = zero();
    for (std::size_t i = digits.size(); i-- > 0;) r = add(times_p_power(r, 1), digits[i]);
    return r;
  }

  // k with xi^k = t, by linear scan.
  std::size_t dlog(const GrElement& t) const {
    check(t);
    for (std::size_t k = 1; k < teich_.size(); ++k)
      if (teich_[k] == t) return k - 1;
    throw PreconditionError("element " + t.str() + " is not a nonzero Teichmuller representative");
  }

  UnitProfile classify_unit(const GrElement& lambda) const {
    if (!is_unit(lambda)) throw PreconditionError("classify_unit: " + lambda.str() + " is not a unit");
    TeichDigits d = teich_digits(lambda);
    UnitProfile prof;
    prof.xi0 = d.digits[0];
    prof.xi1 = a_ >= 2 ? d.digits[1] : zero();
    prof.z = zero();
    if (a_ >= 3) {
      GrElement rest = sub(sub(lambda, prof.xi0), times_p_power(prof.xi1, 1));
      prof.z = divide_by_p_power(rest, 2);
    }
    prof.kind = prof.xi1.is_zero() ? UnitKind::Type0 : UnitKind::Type1;
    return prof;
  }

  // For odd p, lambda is a square iff its leading digit has even discrete
  // log. For p = 2 the group of nonzero Teichmuller elements has odd order,
  // so every one of them is a square.
  bool is_square_unit(const GrElement& lambda) const {
    UnitProfile prof = classify_unit(lambda);
    if (p_ == 2) return true;
    return dlog(prof.xi0) % 2 == 0;
  }

  // The Teichmuller alpha with alpha^{p^s} = xi0.
  GrElement solve_alpha(const GrElement& xi0, unsigned s) const {
    if (xi0.is_zero()) throw PreconditionError("solve_alpha: xi0 must be nonzero");
    Word order = residue_size_ - 1;
    if (order == 1) return one();
    Word e = 1;
    for (unsigned k = 0; k < s; ++k) e = e * (p_ % order) % order;
    Word t = static_cast<Word>(dlog(xi0)) % order * inverse_mod(e, order) % order;
    GrElement alpha = teich_[t + 1];
    if (pow(alpha, checked_pow(p_, s)) != xi0) throw VerificationFailure("solve_alpha: alpha^{p^s} != xi0");
    return alpha;
  }

  std::string str(const GrElement& x) const {
    if (m_ == 1) return std::to_string(x[0]);
    std::string s = "[";
    for (unsigned k = 0; k < m_; ++k) {
      if (k) s += ",";
      s += std::to_string(x[k]);
    }
    return s + "]";
  }
  std::string describe() const {
    return "GR(" + std::to_string(p_) + "^" + std::to_string(a_) + "," + std::to_string(m_) + ")";
  }

  void check(const GrElement& x) const {
    if (x.ring_ptr() != this) throw ContextMismatch();
  }
  void check(const GrElement& x, const GrElement& y) const {
    check(x);
    check(y);
  }

 private:
  GaloisRing(Word p, unsigned a, unsigned m, std::optional<std::vector<Word>> modulus)
      : p_(p), a_(a), m_(m) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (a < 1) throw PreconditionError("exponent a must be at least 1");
    if (m < 1 || m > kMaxDegree) throw PreconditionError("degree m must lie in [1, 16]");
    q_ = checked_pow(p, a, kMaxModulus);
    residue_size_ = checked_pow(p, m, Word{1} << 31);
    size_ = checked_pow(q_, m, Word{1} << 62);
    if (modulus) {
      auto& f = *modulus;
      if (f.size() != m + 1) throw PreconditionError("modulus must have exactly m+1 coefficients");
      for (auto& c : f) c %= q_;
      if (f[m] != 1) throw PreconditionError("modulus must be monic");
      std::vector<Word> bar(f.begin(), f.end());
      for (auto& c : bar) c %= p;
      if (!irreducible_mod_p(bar)) throw PreconditionError("modulus is reducible modulo p");
      f_ = f;
    } else {
      f_ = lowest_irreducible();
    }
    if (a_ > 1) {
      std::vector<Word> bar(f_.begin(), f_.end());
      for (auto& c : bar) c %= p;
      residue_ = RingPtr(new GaloisRing(p, 1, m, bar));
    }
    build_teichmuller();
  }

  Word reduce_signed(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += static_cast<std::int64_t>(q_);
    return static_cast<Word>(r);
  }

  // Dense polynomials over F_p, constant first, used only for the modulus.
  static std::vector<Word> poly_mod(std::vector<Word> num, const std::vector<Word>& den, Word p) {
    std::size_t dd = den.size() - 1;
    Word lead_inv = inverse_mod(den[dd], p);
    while (num.size() > dd && !num.empty()) {
      Word t = num.back() * lead_inv % p;
      std::size_t shift = num.size() - 1 - dd;
      for (std::size_t j = 0; j <= dd; ++j) num[shift + j] = (num[shift + j] + (p - t) * den[j]) % p;
      num.pop_back();
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    return num;
  }
  bool irreducible_mod_p(const std::vector<Word>& f) const {
    std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
      Word count = checked_pow(p_, d);
      for (Word idx = 0; idx < count; ++idx) {
        std::vector<Word> g(d + 1);
        Word t = idx;
        for (std::size_t j = 0; j < d; ++j) {
          g[j] = t % p_;
          t /= p_;
        }
        g[d] = 1;
        if (poly_mod(f, g, p_).empty()) return false;
      }
    }
    return true;
  }
  std::vector<Word> lowest_irreducible() const {
    Word count = residue_size_;
    for (Word idx = 0; idx < count; ++idx) {
      std::vector<Word> f(m_ + 1);
      for (unsigned j = 0; j < m_; ++j) f[j] = idx / checked_pow(p_, m_ - 1 - j) % p_;
      f[m_] = 1;
      if (irreducible_mod_p(f)) return f;
    }
    throw VerificationFailure("no irreducible polynomial found");
  }

  void build_teichmuller() {
    const GaloisRing& field = residue_field();
    Word order = residue_size_ - 1;
    std::vector<Word> prime_factors;
    for (Word t = order, d = 2; t > 1; ++d) {
      if (d * d > t) d = t;
      if (t % d == 0) {
        prime_factors.push_back(d);
        while (t % d == 0) t /= d;
      }
    }
    std::optional<GrElement> gen;
    for (Word idx = 1; idx < residue_size_ && !gen; ++idx) {
      GrElement g = field.element(idx);
      bool primitive = std::all_of(prime_factors.begin(), prime_factors.end(),
                                   [&](Word r) { return !field.pow(g, order / r).is_one(); });
      if (primitive) gen = g;
    }
    if (!gen) throw VerificationFailure("residue field has no generator");
    GrElement xi = teichmuller_lift(reinterpret(*gen));
    teich_.push_back(zero());
    GrElement t = one();
    for (Word k = 0; k < order; ++k) {
      teich_.push_back(t);
      t = mul(t, xi);
    }
  }

  Word p_;
  unsigned a_;
  unsigned m_;
  Word q_ = 0;
  Word residue_size_ = 0;
  Word size_ = 0;
  std::vector<Word> f_;
  RingPtr residue_;
  std::vector<GrElement> teich_;
};

inline GrElement GrElement::operator+(const GrElement& y) const { return ring_->add(*this, y); }
inline GrElement GrElement::operator-(const GrElement& y) const { return ring_->sub(*this, y); }
inline GrElement GrElement::operator*(const GrElement& y) const { return ring_->mul(*this, y); }
inline GrElement GrElement::operator-() const { return ring_->neg(*this); }
inline std::string GrElement::str() const { return ring_ ? ring_->str(*this) : "<null>"; }

namespace detail {

// Smallest positive a0 with 2^{a0} >= a.
inline unsigned doubling_bound(unsigned a) {
  unsigned a0 = 1;
  while ((1u << a0) < a) ++a0;
  return a0;
}

// (1 - y) * prod_{j=first}^{a0-1} (1 + y^{2^j})
inline GrElement telescoping_inverse(const GaloisRing& ring, const GrElement& y, unsigned first) {
  unsigned a0 = doubling_bound(ring.a());
  GrElement result = ring.sub(ring.one(), y);
  GrElement power = y;
  for (unsigned j = 0; j < a0; ++j) {
    if (j >= first) result = ring.mul(result, ring.add(ring.one(), power));
    power = ring.mul(power, power);
  }
  return result;
}

}  // namespace detail

// Closed-form inverse of a Type (1) unit xi00 + p*xi01 + p^2*z, written as
// xi00^{-1} (1 + pw)^{-1} with w = xi00^{-1} xi01 + p xi00^{-1} z.
inline GrElement type1_inverse_formula(const GaloisRing& ring, const GrElement& lambda,
                                       InverseVariant variant = InverseVariant::Corrected) {
  UnitProfile prof = ring.classify_unit(lambda);
  if (prof.kind != UnitKind::Type1) throw PreconditionError("type1_inverse_formula: unit is not Type (1)");
  GrElement inv0 = ring.pow(prof.xi0, ring.residue_size() - 2);
  GrElement w = ring.add(ring.mul(inv0, prof.xi1), ring.times_p_power(ring.mul(inv0, prof.z), 1));
  GrElement pw = ring.times_p_power(w, 1);
  unsigned first = variant == InverseVariant::Corrected ? 1 : 0;
  GrElement result = ring.mul(inv0, detail::telescoping_inverse(ring, pw, first));
  if (variant == InverseVariant::Corrected) {
    if (!ring.mul(lambda, result).is_one())
      throw VerificationFailure("type1_inverse_formula: lambda * result != 1");
    if (ring.classify_unit(result).kind != UnitKind::Type1)
      throw VerificationFailure("type1_inverse_formula: inverse is not Type (1)");
  }
  return result;
}

// Closed-form inverse of a Type (0) unit xi0 + p^2 z, as
// xi0^{-1} (1 + p^2 xi0^{-1} z)^{-1}.
inline GrElement type0_inverse_formula(const GaloisRing& ring, const GrElement& lambda,
                                       InverseVariant variant = InverseVariant::Corrected) {
  UnitProfile prof = ring.classify_unit(lambda);
  if (prof.kind != UnitKind::Type0) throw PreconditionError("type0_inverse_formula: unit is not Type (0)");
  GrElement inv0 = ring.pow(prof.xi0, ring.residue_size() - 2);
  GrElement y = ring.times_p_power(ring.mul(inv0, prof.z), 2);
  unsigned first = variant == InverseVariant::Corrected ? 1 : 0;
  GrElement result = ring.mul(inv0, detail::telescoping_inverse(ring, y, first));
  if (variant == InverseVariant::Corrected) {
    if (!ring.mul(lambda, result).is_one())
      throw VerificationFailure("type0_inverse_formula: lambda * result != 1");
    if (ring.classify_unit(result).kind != UnitKind::Type0)
      throw VerificationFailure("type0_inverse_formula: inverse is not Type (0)");
  }
  return result;
}

// Brute-force square root search over all elements (smallest index first).
inline std::optional<GrElement> find_square_root(const GaloisRing& ring, const GrElement& x) {
  for (Word idx = 0; idx < ring.size(); ++idx) {
    GrElement y = ring.element(idx);
    if (ring.mul(y, y) == x) return y;
  }
  return std::nullopt;
}

}  // namespace grcodes

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

// The constacyclic quotient GR(p^a, m)[x] / <x^n - c> and its chain-ring
// specialization R = GR(p^a, m)[x] / <x^{4p^s} - lambda>.

#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "grcodes/galois_ring.hpp"
#include "grcodes/poly.hpp"

namespace grcodes {

class ConstacyclicRing;

// A residue class of a polynomial of degree < n, stored as n blocks of m
// words (coefficient of x^r at block r).
class QrElement {
 public:
  QrElement() = default;
  QrElement(const ConstacyclicRing* ctx, std::vector<Word> data) : ctx_(ctx), d_(std::move(data)) {}

  const ConstacyclicRing& ctx() const { return *ctx_; }
  const ConstacyclicRing* ctx_ptr() const { return ctx_; }
  const std::vector<Word>& data() const { return d_; }
  std::vector<Word>& mutable_data() { return d_; }
  bool is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](Word w) { return w == 0; });
  }

  friend bool operator==(const QrElement& x, const QrElement& y) { return x.ctx_ == y.ctx_ && x.d_ == y.d_; }
  friend bool operator<(const QrElement& x, const QrElement& y) { return x.d_ < y.d_; }

  inline QrElement operator+(const QrElement& y) const;
  inline QrElement operator-(const QrElement& y) const;
  inline QrElement operator*(const QrElement& y) const;

 private:
  const ConstacyclicRing* ctx_ = nullptr;
  std::vector<Word> d_;
};

// GR(p^a, m)[x] / <x^n - c> for a unit c.
class ConstacyclicRing {
 public:
  ConstacyclicRing(RingPtr ring, std::size_t n, GrElement c) : ring_(std::move(ring)), n_(n), c_(std::move(c)) {
    if (n_ == 0) throw PreconditionError("length must be positive");
    ring_->check(c_);
    if (!ring_->is_unit(c_)) throw PreconditionError("the shift constant " + c_.str() + " is not a unit");
  }
  virtual ~ConstacyclicRing() = default;
  ConstacyclicRing(const ConstacyclicRing&) = delete;
  ConstacyclicRing& operator=(const ConstacyclicRing&) = delete;

  const GaloisRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t n() const { return n_; }
  const GrElement& shift_constant() const { return c_; }
  unsigned m() const { return ring_->m(); }

  QrElement zero() const { return QrElement(this, std::vector<Word>(n_ * m(), 0)); }
  QrElement one() const { return constant(ring_->one()); }
  QrElement constant(const GrElement& c) const { return monomial(c, 0); }
  // c x^k, folded when k >= n.
  QrElement monomial(const GrElement& c, std::size_t k) const {
    return from_poly(poly_monomial(*ring_, c, k));
  }
  QrElement x_power(std::size_t k) const { return monomial(ring_->one(), k); }

  QrElement from_poly(const Poly& f) const {
    QrElement r = zero();
    for (std::size_t k = 0; k < f.size(); ++k) {
      ring_->check(f[k]);
      GrElement c = f[k];
      std::size_t pos = k;
      while (pos >= n_) {
        pos -= n_;
        c = ring_->mul(c, c_);
      }
      Word* out = block(r, pos);
      ring_->add_into(out, c.coeffs().data(), out);
    }
    return r;
  }
  QrElement from_coeffs(const std::vector<GrElement>& coeffs) const {
    if (coeffs.size() > n_) throw PreconditionError("too many coefficients for length " + std::to_string(n_));
    return from_poly(coeffs);
  }
  // Raw words, n*m of them, each reduced modulo p^a.
  QrElement from_words(std::vector<Word> words) const {
    if (words.size() != n_ * m()) throw PreconditionError("vector has the wrong length");
    for (auto& w : words) w %= ring_->q();
    return QrElement(this, std::move(words));
  }
  Poly to_poly(const QrElement& f) const {
    check(f);
    Poly out;
    for (std::size_t k = 0; k < n_; ++k) out.push_back(coeff(f, k));
    poly_trim(out);
    return out;
  }
  GrElement coeff(const QrElement& f, std::size_t k) const {
    return ring_->from_words({f.data().data() + k * m(), m()});
  }
  // Reinterprets an element of a ring with the same base ring and length.
  QrElement adopt(const QrElement& f) const {
    if (f.ctx().n() != n_ || !f.ctx().ring().same_as(*ring_)) throw ContextMismatch();
    return QrElement(this, f.data());
  }

  template <class Rng>
  QrElement random(Rng& rng) const {
    std::uniform_int_distribution<Word> dist(0, ring_->q() - 1);
    std::vector<Word> d(n_ * m());
    for (auto& w : d) w = dist(rng);
    return QrElement(this, std::move(d));
  }

  QrElement add(const QrElement& f, const QrElement& g) const {
    check(f, g);
    QrElement r = zero();
    for (std::size_t k = 0; k < n_; ++k) ring_->add_into(cblock(f, k), cblock(g, k), block(r, k));
    return r;
  }
  QrElement sub(const QrElement& f, const QrElement& g) const {
    check(f, g);
    QrElement r = zero();
    for (std::size_t k = 0; k < n_; ++k) ring_->sub_into(cblock(f, k), cblock(g, k), block(r, k));
    return r;
  }
  QrElement neg(const QrElement& f) const {
    check(f);
    QrElement r = zero();
    for (std::size_t k = 0; k < n_; ++k) ring_->neg_into(cblock(f, k), block(r, k));
    return r;
  }
  QrElement scale(const GrElement& c, const QrElement& f) const {
    check(f);
    ring_->check(c);
    QrElement r = zero();
    for (std::size_t k = 0; k < n_; ++k) ring_->mul_into(c.coeffs().data(), cblock(f, k), block(r, k));
    return r;
  }

  QrElement mul(const QrElement& f, const QrElement& g) const {
    check(f, g);
    const unsigned mm = m();
    std::vector<Word> acc((2 * n_ - 1) * mm, 0);
    if (mm == 1) {
      const Word q = ring_->q();
      const Word* x = f.data().data();
      const Word* y = g.data().data();
      for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) acc[i + j] = (acc[i + j] + x[i] * y[j]) % q;
      }
    } else {
      for (std::size_t i = 0; i < n_; ++i) {
        if (ring_->is_zero_block(cblock(f, i))) continue;
        for (std::size_t j = 0; j < n_; ++j) ring_->mul_add_into(cblock(f, i), cblock(g, j), acc.data() + (i + j) * mm);
      }
    }
    for (std::size_t k = 2 * n_ - 1; k-- > n_;)
      ring_->mul_add_into(c_.coeffs().data(), acc.data() + k * mm, acc.data() + (k - n_) * mm);
    acc.resize(n_ * mm);
    return QrElement(this, std::move(acc));
  }

  QrElement pow(QrElement f, std::uint64_t e) const {
    QrElement r = one();
    while (e) {
      if (e & 1) r = mul(r, f);
      e >>= 1;
      if (e) f = mul(f, f);
    }
    return r;
  }
  QrElement pow(QrElement f, const BigInt& e) const {
    QrElement r = one();
    for (std::size_t bit = 0, top = e == 0 ? 0 : boost::multiprecision::msb(e) + 1; bit < top; ++bit) {
      if (boost::multiprecision::bit_test(e, bit)) r = mul(r, f);
      if (bit + 1 < top) f = mul(f, f);
    }
    return r;
  }

  // x * f: (c f_{n-1}, f_0, ..., f_{n-2}).
  QrElement shift(const QrElement& f) const {
    check(f);
    QrElement r = zero();
    ring_->mul_into(c_.coeffs().data(), cblock(f, n_ - 1), block(r, 0));
    std::copy_n(f.data().begin(), (n_ - 1) * m(), r.mutable_data().begin() + m());
    return r;
  }
  // x^k * f
  QrElement shift(QrElement f, std::size_t k) const {
    for (std::size_t j = 0; j < k; ++j) f = shift(f);
    return f;
  }

  // Sum over k of (-e)^k for k < terms; the inverse of 1 + e when
  // e^terms = 0.
  QrElement geometric_inverse(const QrElement& e, std::size_t terms) const {
    QrElement minus_e = neg(e);
    QrElement sum = zero();
    QrElement term = one();
    for (std::size_t k = 0; k < terms && !term.is_zero(); ++k) {
      sum = add(sum, term);
      term = mul(term, minus_e);
    }
    if (!term.is_zero()) throw VerificationFailure("geometric series did not terminate");
    return sum;
  }

  std::string str(const QrElement& f) const { return poly_str(to_poly(f)); }

  void check(const QrElement& f) const {
    if (f.ctx_ptr() != this) throw ContextMismatch();
  }
  void check(const QrElement& f, const QrElement& g) const {
    check(f);
    check(g);
  }

 protected:
  Word* block(QrElement& f, std::size_t k) const { return f.mutable_data().data() + k * m(); }
  const Word* cblock(const QrElement& f, std::size_t k) const { return f.data().data() + k * m(); }

  RingPtr ring_;
  std::size_t n_;
  GrElement c_;
};

inline QrElement QrElement::operator+(const QrElement& y) const { return ctx_->add(*this, y); }
inline QrElement QrElement::operator-(const QrElement& y) const { return ctx_->sub(*this, y); }
inline QrElement QrElement::operator*(const QrElement& y) const { return ctx_->mul(*this, y); }

// Euclidean inner product of two words of equal length over the same ring.
inline GrElement inner_product(const GaloisRing& ring, std::span<const Word> x, std::span<const Word> y) {
  if (x.size() != y.size()) throw PreconditionError("inner product of words of different lengths");
  const unsigned m = ring.m();
  GrElement acc = ring.zero();
  for (std::size_t k = 0; k < x.size(); k += m)
    ring.mul_add_into(x.data() + k, y.data() + k, acc.mutable_coeffs().data());
  return acc;
}

inline GrElement inner_product(const QrElement& x, const QrElement& y) {
  if (!x.ctx().ring().same_as(y.ctx().ring())) throw ContextMismatch();
  return inner_product(x.ctx().ring(), x.data(), y.data());
}

struct GuardReport {
  bool passed = true;
  std::string polynomial;  // x^4 - alpha over the residue field
  std::string witness;     // an explicit factorization when the guard fails
};

// Tests irreducibility of x^4 - alpha mod p over the residue field by an
// exhaustive search for roots and then for monic quadratic factors.
inline GuardReport locality_guard(const GaloisRing& ring, const GrElement& alpha) {
  const GaloisRing& field = ring.residue_field();
  GrElement abar = ring.reduce_mod_p(alpha);
  Poly quartic(5, field.zero());
  quartic[0] = field.neg(abar);
  quartic[4] = field.one();
  GuardReport report;
  report.polynomial = poly_str(quartic);
  auto fail = [&](const Poly& factor) {
    PolyDivision div = poly_divmod(field, quartic, factor);
    report.passed = false;
    report.witness = report.polynomial + " = (" + poly_str(factor) + ")(" + poly_str(div.quotient) + ")";
    return report;
  };
  for (Word idx = 0; idx < field.size(); ++idx) {
    GrElement t = field.element(idx);
    if (field.pow(t, 4) == abar) return fail(Poly{field.neg(t), field.one()});
  }
  for (Word u = 0; u < field.size(); ++u) {
    for (Word v = 0; v < field.size(); ++v) {
      Poly quad{field.element(v), field.element(u), field.one()};
      if (poly_divmod(field, quartic, quad).remainder.empty()) return fail(quad);
    }
  }
  return report;
}

struct DigitExpansion {
  // digits[j] holds the coefficients of x^0..x^3, all Teichmuller.
  std::vector<std::array<GrElement, 4>> digits;

  // Index of the first nonzero digit; the length when all are zero.
  std::size_t leading_index() const {
    for (std::size_t j = 0; j < digits.size(); ++j)
      if (std::any_of(digits[j].begin(), digits[j].end(), [](const GrElement& c) { return !c.is_zero(); })) return j;
    return digits.size();
  }
};

enum class QuotientMode { Chain, Generic };

class QuotientRing;
using QuotientPtr = std::shared_ptr<const QuotientRing>;

// R_p(a, m, lambda) = GR(p^a, m)[x] / <x^{4p^s} - lambda>. In chain mode the
// ring is local with maximal ideal <g>, g = x^4 - alpha, alpha^{p^s} = xi0.
class QuotientRing : public ConstacyclicRing {
 public:
  static QuotientPtr make(RingPtr ring, const GrElement& lambda, unsigned s,
                          QuotientMode mode = QuotientMode::Chain, bool force = false) {
    return QuotientPtr(new QuotientRing(std::move(ring), lambda, s, mode, force));
  }

  const GrElement& lambda() const { return c_; }
  unsigned s() const { return s_; }
  Word ps() const { return ps_; }
  QuotientMode mode() const { return mode_; }
  bool is_chain() const { return mode_ == QuotientMode::Chain; }
  bool forced() const { return forced_; }
  const UnitProfile& profile() const { return profile_; }
  const GuardReport& guard() const { return guard_; }
  // Nilpotency index a p^s of g.
  std::size_t nilpotency() const { return ring_->a() * ps_; }

  const GrElement& alpha() const { return require_chain(), alpha_; }
  const QrElement& g() const { return require_chain(), g_; }
  const QrElement& w() const { return require_chain(), w_; }
  const QrElement& w_inv() const { return require_chain(), w_inv_; }

  // h * (x^4 - alpha), linear time.
  QrElement mul_by_g(const QrElement& h) const {
    QrElement r = shift(h, 4);
    return sub(r, scale(alpha_, h));
  }
  QrElement g_power(std::size_t k) const {
    require_chain();
    QrElement r = one();
    for (std::size_t j = 0; j < k; ++j) r = mul_by_g(r);
    return r;
  }

  // Largest i with f in <g^i>; a p^s for zero. Computed as N - k for the
  // least k with f g^k = 0.
  std::size_t valuation(const QrElement& f) const {
    require_chain();
    check(f);
    const std::size_t N = nilpotency();
    QrElement h = f;
    for (std::size_t k = 0; k <= N; ++k) {
      if (h.is_zero()) return N - k;
      h = mul_by_g(h);
    }
    throw VerificationFailure("element not annihilated by g^N");
  }

  // f = sum_j digits[j] g^j with Teichmuller digits of degree <= 3.
  DigitExpansion digit_expansion(const QrElement& f) const {
    require_chain();
    check(f);
    const unsigned mm = m();
    const std::size_t N = nilpotency();
    DigitExpansion out;
    out.digits.reserve(N);
    QrElement cur = f;
    for (std::size_t j = 0; j < N; ++j) {
      // Synthetic division by the monic x^4 - alpha.
      std::vector<Word> work = cur.data();
      std::vector<Word> quot(n_ * mm, 0);
      for (std::size_t k = n_; k-- > 4;) {
        std::copy_n(work.begin() + k * mm, mm, quot.begin() + (k - 4) * mm);
        ring_->mul_add_into(alpha_.coeffs().data(), work.data() + k * mm, work.data() + (k - 4) * mm);
      }
      std::array<GrElement, 4> digit;
      Poly carry(4, ring_->zero());
      for (std::size_t k = 0; k < 4; ++k) {
        GrElement r = ring_->from_words({work.data() + k * mm, mm});
        digit[k] = ring_->teichmuller_lift(r);
        carry[k] = ring_->divide_by_p_power(ring_->sub(r, digit[k]), 1);
      }
      out.digits.push_back(digit);
      poly_trim(carry);
      cur = add(QrElement(this, std::move(quot)), mul(cofactor_, from_poly(carry)));
    }
    if (recompose(out) != f) throw VerificationFailure("digit expansion does not recompose");
    return out;
  }

  QrElement recompose(const DigitExpansion& e) const {
    require_chain();
    QrElement acc = zero();
    for (std::size_t j = e.digits.size(); j-- > 0;) {
      acc = mul_by_g(acc);
      acc = add(acc, from_poly(Poly(e.digits[j].begin(), e.digits[j].end())));
    }
    return acc;
  }

  // Inverse through the leading digit: f = h (1 + e) with h of degree <= 3,
  // h inverted by the cofactor constructions, e in <g>.
  QrElement inverse(const QrElement& f) const {
    require_chain();
    if (valuation(f) != 0) throw NotInvertible("element lies in the maximal ideal <x^4-alpha>");
    DigitExpansion ex = digit_expansion(f);
    Poly h(ex.digits[0].begin(), ex.digits[0].end());
    poly_trim(h);
    QrElement h_inv = low_degree_inverse(h);
    QrElement e = sub(mul(f, h_inv), one());
    QrElement result = mul(h_inv, geometric_inverse(e, nilpotency()));
    if (mul(f, result) != one()) throw VerificationFailure("inverse construction failed");
    return result;
  }

  // Independent route: f^{p^{4m} - 2} inverts f modulo <g>, then Newton
  // steps y <- y(2 - fy) square the error.
  QrElement inverse_newton(const QrElement& f) const {
    check(f);
    BigInt e = big_pow(ring_->p(), 4 * m()) - 2;
    QrElement y = pow(f, e);
    QrElement two = constant(ring_->from_int(2));
    for (std::size_t precision = 1; precision <= 2 * nilpotency(); precision *= 2) {
      QrElement err = sub(one(), mul(f, y));
      if (err.is_zero()) return y;
      y = mul(y, sub(two, mul(f, y)));
    }
    if (!sub(one(), mul(f, y)).is_zero()) throw NotInvertible("element is not a unit");
    return y;
  }

  // Inverse of a polynomial of degree <= 3 with unit residue.
  QrElement low_degree_inverse(Poly P) const {
    require_chain();
    poly_trim(P);
    if (poly_degree(P) > 3) throw PreconditionError("low_degree_inverse expects degree at most 3");
    Poly PT;
    for (const auto& c : P) PT.push_back(ring_->teichmuller_lift(c));
    poly_trim(PT);
    if (PT.empty()) throw NotInvertible("polynomial is divisible by p");
    if (PT != P) {
      QrElement y = low_degree_inverse(PT);
      QrElement e = mul(y, from_poly(poly_sub(*ring_, P, PT)));
      return mul(y, geometric_inverse(e, ring_->a()));
    }
    long d = poly_degree(P);
    GrElement lead_inv = ring_->inv(P[d]);
    if (d == 0) return constant(lead_inv);
    Poly monic = poly_scale(*ring_, lead_inv, P);
    QrElement r;
    if (d == 1) r = inverse_linear(monic[0]);
    if (d == 2) r = inverse_quadratic(monic[0], monic[1]);
    if (d == 3) r = inverse_cubic(monic[0], monic[1], monic[2]);
    return scale(lead_inv, r);
  }

 private:
  QuotientRing(RingPtr ring, const GrElement& lambda, unsigned s, QuotientMode mode, bool force)
      : ConstacyclicRing(ring, 4 * checked_pow(ring->p(), s, Word{1} << 12), lambda),
        s_(s),
        ps_(checked_pow(ring->p(), s)),
        mode_(mode) {
    profile_ = ring_->classify_unit(lambda);
    if (mode_ == QuotientMode::Generic) return;
    if (ring_->a() < 2) throw PreconditionError("chain mode requires a >= 2");
    if (profile_.kind != UnitKind::Type1) throw PreconditionError("chain mode requires a Type (1) unit");
    if (ring_->is_square_unit(lambda))
      throw PreconditionError("chain mode requires a non-square lambda; " + lambda.str() + " is a square");
    alpha_ = ring_->solve_alpha(profile_.xi0, s_);
    guard_ = locality_guard(*ring_, alpha_);
    if (!guard_.passed) {
      if (!force)
        throw GuardError("locality guard failed: x^4 - alpha is reducible over the residue field, so the quotient "
                         "ring is not a chain ring: " + guard_.witness,
                         guard_.witness);
      forced_ = true;
    }
    g_ = sub(x_power(4), constant(alpha_));
    QrElement G = pow(g_, ps_);
    std::vector<Word> wd = G.data();
    for (auto& c : wd) {
      if (c % ring_->p() != 0) throw VerificationFailure("(x^4-alpha)^{p^s} has a coefficient prime to p");
      c /= ring_->p();
    }
    w_ = QrElement(this, std::move(wd));
    if (scale(ring_->from_int(static_cast<std::int64_t>(ring_->p())), w_) != G)
      throw VerificationFailure("p * w does not recompose (x^4-alpha)^{p^s}");
    QrElement below = g_power(nilpotency() - 1);
    if (below.is_zero() || !mul_by_g(below).is_zero())
      throw VerificationFailure("x^4-alpha does not have nilpotency index a p^s");
    w_inv_ = inverse_newton(w_);
    cofactor_ = mul(g_power(ps_ - 1), w_inv_);
  }

  void require_chain() const {
    if (mode_ != QuotientMode::Chain) throw PreconditionError("operation requires a chain-mode quotient ring");
  }

  // (x + e)^{-1}: with K = (x-e)^{p^s} (x+e)^{p^s-1} (x^2+e^2)^{p^s} one has
  // (x+e) K = (x^4 - e^4)^{p^s} = c0 + p N with c0 a unit.
  QrElement inverse_linear(const GrElement& e) const {
    const GaloisRing& R = *ring_;
    QrElement x_minus = from_poly(Poly{R.neg(e), R.one()});
    QrElement x_plus = from_poly(Poly{e, R.one()});
    QrElement x2_plus = from_poly(Poly{R.mul(e, e), R.zero(), R.one()});
    QrElement K = mul(mul(pow(x_minus, ps_), pow(x_plus, ps_ - 1)), pow(x2_plus, ps_));
    QrElement T = mul(x_plus, K);
    GrElement c0 = coeff(T, 0);
    if (!R.is_unit(c0)) throw NotInvertible("x + e is not a unit: e^4 is congruent to alpha");
    QrElement rest = sub(T, constant(c0));
    for (Word c : rest.data())
      if (c % R.p() != 0) throw VerificationFailure("(x^4-e^4)^{p^s} is not constant modulo p");
    GrElement c0_inv = R.inv(c0);
    QrElement T_inv = scale(c0_inv, geometric_inverse(scale(c0_inv, rest), R.a()));
    return mul(K, T_inv);
  }

  // (x^2 + e x + h) (x^2 - e x + e^2 - h) = (x^4 - alpha) + L with L linear.
  QrElement inverse_quadratic(const GrElement& h, const GrElement& e) const {
    const GaloisRing& R = *ring_;
    Poly cof{R.sub(R.mul(e, e), h), R.neg(e), R.one()};
    GrElement e2 = R.mul(e, e);
    Poly L{R.add(R.sub(R.mul(e2, h), R.mul(h, h)), alpha_), R.sub(R.mul(e2, e), R.scale(2, R.mul(e, h)))};
    return close_over_g(from_poly(cof), L);
  }

  // (x^3 + e x^2 + h x + k) (x - e) = (x^4 - alpha) + M with deg M <= 2.
  QrElement inverse_cubic(const GrElement& k, const GrElement& h, const GrElement& e) const {
    const GaloisRing& R = *ring_;
    Poly cof{R.neg(e), R.one()};
    Poly M{R.sub(alpha_, R.mul(k, e)), R.sub(k, R.mul(h, e)), R.sub(h, R.mul(e, e))};
    return close_over_g(from_poly(cof), M);
  }

  // cof * (g + L)^{-1} = cof * L^{-1} (1 + L^{-1} g)^{-1}.
  QrElement close_over_g(const QrElement& cof, Poly L) const {
    poly_trim(L);
    QrElement L_inv = low_degree_inverse(L);
    QrElement t = mul_by_g(L_inv);
    return mul(cof, mul(L_inv, geometric_inverse(t, nilpotency())));
  }

  unsigned s_;
  Word ps_;
  QuotientMode mode_;
  bool forced_ = false;
  UnitProfile profile_;
  GuardReport guard_;
  GrElement alpha_;
  QrElement g_;
  QrElement w_;
  QrElement w_inv_;
  QrElement cofactor_;  // g^{p^s - 1} w^{-1}, so that p = g * cofactor
};

}  // namespace grcodes

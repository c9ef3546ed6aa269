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

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace grcodes {

// Residues modulo p^a. Every modulus handled by the library is below 2^31,
// so a product of two residues always fits.
using Word = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr Word kMaxModulus = Word{1} << 31;
inline constexpr unsigned kMaxDegree = 16;

// An argument violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands were built over different rings.
class ContextMismatch : public PreconditionError {
 public:
  ContextMismatch() : PreconditionError("operands belong to different contexts") {}
};

class NotInvertible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The residue quartic x^4 - alpha factors over the residue field, so the
// quotient ring is not local. `witness` holds the explicit factorization.
class GuardError : public PreconditionError {
 public:
  GuardError(const std::string& message, std::string witness)
      : PreconditionError(message), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// An enumeration would visit more codewords than the caller allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold exactly was found to fail.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_prime(Word n) {
  if (n < 2) return false;
  for (Word d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// b^e, throwing when the result would exceed `limit`.
inline Word checked_pow(Word b, std::uint64_t e, Word limit = ~Word{0}) {
  Word r = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (b != 0 && r > limit / b) throw PreconditionError("integer power overflows the supported range");
    r *= b;
  }
  return r;
}

inline BigInt big_pow(Word b, std::uint64_t e) {
  BigInt r = 1;
  BigInt base = b;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Modular inverse of x modulo n (gcd(x, n) = 1 required).
inline Word inverse_mod(Word x, Word n) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(x % n);
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - quotient * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - quotient * new_r};
  }
  if (r != 1) throw NotInvertible("integer is not invertible modulo " + std::to_string(n));
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<Word>(t);
}

// p^e, kept symbolic. Code sizes overflow machine integers quickly.
struct PrimePower {
  Word p = 0;
  std::uint64_t e = 0;

  BigInt value() const { return big_pow(p, e); }
  std::string str() const { return e == 0 ? std::string("1") : std::to_string(p) + "^" + std::to_string(e); }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Renders v exactly as "c*p^e" with p not dividing c ("p^e" when c = 1,
// "c" when e = 0).
inline std::string render_exact(const BigInt& v, Word p) {
  if (v == 0) return "0";
  BigInt c = v;
  std::uint64_t e = 0;
  while (c % p == 0) {
    c /= p;
    ++e;
  }
  if (e == 0) return c.str();
  std::string power = std::to_string(p) + "^" + std::to_string(e);
  if (c == 1) return power;
  return c.str() + "*" + power;
}

}  // namespace grcodes

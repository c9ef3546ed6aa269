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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace {

using namespace grcodes;

std::set<Word> teich_indices(const GaloisRing& R) {
  std::set<Word> out;
  for (const auto& t : R.teichmuller()) out.insert(R.index_of(t));
  return out;
}

TEST(GaloisRing, TeichmullerZ25) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_EQ(teich_indices(*R), (std::set<Word>{0, 1, 7, 18, 24}));
  EXPECT_EQ(R->xi(), R->from_int(7));
}

TEST(GaloisRing, TeichmullerZ9) {
  auto R = GaloisRing::make(3, 2, 1);
  EXPECT_EQ(teich_indices(*R), (std::set<Word>{0, 1, 8}));
  EXPECT_EQ(R->xi(), R->from_int(8));
}

TEST(GaloisRing, PrimeFieldIsItsOwnTeichmullerSet) {
  auto R = GaloisRing::make(5, 1, 1);
  EXPECT_EQ(teich_indices(*R), (std::set<Word>{0, 1, 2, 3, 4}));
}

TEST(GaloisRing, TeichmullerMatchesFixedPointSearch) {
  for (auto R : {GaloisRing::make(3, 2, 2), GaloisRing::make(2, 3, 2), GaloisRing::make(5, 2, 2),
                 GaloisRing::make(3, 3, 1), GaloisRing::make(7, 2, 1)}) {
    EXPECT_EQ(teich_indices(*R), oracle::teichmuller_by_search(*R)) << R->describe();
    EXPECT_EQ(R->teichmuller().size(), R->residue_size());
  }
}

TEST(GaloisRing, XiGeneratesTheNonzeroTeichmullerElements) {
  for (auto R : {GaloisRing::make(3, 2, 2), GaloisRing::make(5, 2, 1), GaloisRing::make(2, 2, 3)}) {
    std::set<Word> powers;
    GrElement t = R->one();
    for (Word k = 0; k + 1 < R->residue_size(); ++k, t = R->mul(t, R->xi())) powers.insert(R->index_of(t));
    EXPECT_EQ(powers.size(), R->residue_size() - 1) << R->describe();
  }
}

TEST(GaloisRing, BasicArithmetic) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_EQ(R->mul(R->from_int(7), R->from_int(18)), R->one());
  auto S = GaloisRing::make(3, 2, 1);
  EXPECT_TRUE(S->add(S->from_int(8), S->one()).is_zero());
  GrElement x = R->from_int(13);
  EXPECT_EQ(R->mul(x, R->one()), x);
}

TEST(GaloisRing, Inverse) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_EQ(R->inv(R->from_int(12)), R->from_int(23));
  auto S = GaloisRing::make(3, 2, 1);
  EXPECT_EQ(S->inv(S->from_int(2)), S->from_int(5));
  EXPECT_EQ(R->inv(R->one()), R->one());
  EXPECT_THROW(R->inv(R->from_int(10)), NotInvertible);
}

TEST(GaloisRing, TeichmullerLiftAndDigits) {
  auto R = GaloisRing::make(5, 2, 1);
  auto S = GaloisRing::make(3, 2, 1);
  EXPECT_EQ(R->teichmuller_lift(R->from_int(12)), R->from_int(7));
  EXPECT_EQ(S->teichmuller_lift(S->from_int(2)), S->from_int(8));
  EXPECT_TRUE(R->teichmuller_lift(R->zero()).is_zero());

  auto d = R->teich_digits(R->from_int(12)).digits;
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], R->from_int(7));
  EXPECT_EQ(d[1], R->from_int(1));
  auto e = S->teich_digits(S->from_int(2)).digits;
  EXPECT_EQ(e[0], S->from_int(8));
  EXPECT_EQ(e[1], S->from_int(1));
  for (const auto& z : R->teich_digits(R->zero()).digits) EXPECT_TRUE(z.is_zero());
}

TEST(GaloisRing, Classify) {
  auto R = GaloisRing::make(5, 2, 1);
  auto p12 = R->classify_unit(R->from_int(12));
  EXPECT_EQ(p12.kind, UnitKind::Type1);
  EXPECT_EQ(p12.xi0, R->from_int(7));
  EXPECT_EQ(p12.xi1, R->from_int(1));
  EXPECT_TRUE(p12.z.is_zero());
  auto p7 = R->classify_unit(R->from_int(7));
  EXPECT_EQ(p7.kind, UnitKind::Type0);
  EXPECT_EQ(p7.xi0, R->from_int(7));

  auto S = GaloisRing::make(3, 2, 1);
  auto p5 = S->classify_unit(S->from_int(5));
  EXPECT_EQ(p5.kind, UnitKind::Type1);
  EXPECT_EQ(p5.xi0, S->from_int(8));
  EXPECT_EQ(p5.xi1, S->from_int(8));
}

TEST(GaloisRing, Type1InverseFormula) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_EQ(type1_inverse_formula(*R, R->from_int(12)), R->from_int(23));
  EXPECT_EQ(type1_inverse_formula(*R, R->from_int(2)), R->from_int(13));
  // The product started at j = 0 collapses to xi0^{-1}.
  GrElement printed = type1_inverse_formula(*R, R->from_int(12), InverseVariant::Printed);
  EXPECT_EQ(printed, R->from_int(18));
  EXPECT_EQ(R->mul(printed, R->from_int(12)), R->from_int(16));

  auto S = GaloisRing::make(3, 2, 1);
  GrElement inv2 = type1_inverse_formula(*S, S->from_int(2));
  EXPECT_EQ(inv2, S->from_int(5));
  EXPECT_EQ(S->classify_unit(inv2).kind, UnitKind::Type1);
  EXPECT_THROW(type1_inverse_formula(*R, R->from_int(7)), PreconditionError);
}

TEST(GaloisRing, Type0InverseFormula) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_EQ(type0_inverse_formula(*R, R->one()), R->one());
  auto T = GaloisRing::make(3, 3, 1);
  EXPECT_EQ(type0_inverse_formula(*T, T->from_int(10)), T->from_int(19));
  EXPECT_EQ(type0_inverse_formula(*T, T->from_int(10), InverseVariant::Printed), T->one());
}

TEST(GaloisRing, ClosedFormInversesMatchSearchOnEveryUnit) {
  for (auto R : {GaloisRing::make(5, 2, 1), GaloisRing::make(3, 2, 2), GaloisRing::make(3, 3, 1),
                 GaloisRing::make(2, 3, 2), GaloisRing::make(5, 3, 1)}) {
    for (const auto& u : oracle::units(*R)) {
      GrElement truth = oracle::inverse_by_search(*R, u);
      EXPECT_EQ(R->inv(u), truth) << R->describe() << " " << u.str();
      auto prof = R->classify_unit(u);
      GrElement closed = prof.kind == UnitKind::Type1 ? type1_inverse_formula(*R, u) : type0_inverse_formula(*R, u);
      EXPECT_EQ(closed, truth) << R->describe() << " " << u.str();
    }
  }
}

TEST(GaloisRing, DiscreteLog) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_EQ(R->dlog(R->from_int(7)), 1u);
  EXPECT_EQ(R->dlog(R->from_int(24)), 2u);
  EXPECT_EQ(R->dlog(R->one()), 0u);
}

TEST(GaloisRing, SquareUnits) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_TRUE(R->is_square_unit(R->from_int(4)));
  EXPECT_FALSE(R->is_square_unit(R->from_int(12)));
  EXPECT_TRUE(R->is_square_unit(R->one()));
  for (auto S : {GaloisRing::make(5, 2, 1), GaloisRing::make(3, 2, 2), GaloisRing::make(7, 2, 1)})
    for (const auto& u : oracle::units(*S))
      EXPECT_EQ(S->is_square_unit(u), find_square_root(*S, u).has_value()) << S->describe() << " " << u.str();
}

TEST(GaloisRing, SolveAlpha) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_EQ(R->solve_alpha(R->from_int(7), 1), R->from_int(7));
  auto S = GaloisRing::make(3, 2, 1);
  EXPECT_EQ(S->solve_alpha(S->from_int(8), 1), S->from_int(8));
  EXPECT_EQ(R->solve_alpha(R->one(), 2), R->one());
  auto G = GaloisRing::make(3, 2, 2);
  for (const auto& t : G->teichmuller()) {
    if (t.is_zero()) continue;
    for (unsigned s : {1u, 2u}) {
      GrElement alpha = G->solve_alpha(t, s);
      EXPECT_TRUE(G->is_teichmuller(alpha));
      EXPECT_EQ(G->pow(alpha, checked_pow(3, s)), t);
    }
  }
}

TEST(GaloisRing, RejectsBadParameters) {
  EXPECT_THROW(GaloisRing::make(4, 1, 1), PreconditionError);
  EXPECT_THROW(GaloisRing::make(5, 0, 1), PreconditionError);
  // u^2 + 1 factors over F_5.
  EXPECT_THROW(GaloisRing::make(5, 2, 2, std::vector<Word>{1, 0, 1}), PreconditionError);
  auto A = GaloisRing::make(5, 2, 1);
  auto B = GaloisRing::make(5, 2, 1);
  EXPECT_THROW(A->add(A->one(), B->one()), ContextMismatch);
}

TEST(GaloisRing, ExplicitModulus) {
  auto R = GaloisRing::make(3, 2, 2, std::vector<Word>{2, 1, 1});
  EXPECT_EQ(R->size(), 81u);
  EXPECT_EQ(R->teichmuller().size(), 9u);
  EXPECT_EQ(R->modulus(), (std::vector<Word>{2, 1, 1}));
}

// Property checks over random elements.

TEST(GaloisRingProperty, CommutativeRingAxioms) {
  auto gen = oracle::rng(1);
  for (auto R : {GaloisRing::make(5, 2, 1), GaloisRing::make(3, 2, 2), GaloisRing::make(2, 3, 3),
                 GaloisRing::make(7, 3, 2), GaloisRing::make(3, 4, 3)}) {
    for (int trial = 0; trial < 300; ++trial) {
      GrElement x = R->random(gen), y = R->random(gen), z = R->random(gen);
      ASSERT_EQ(x + y, y + x);
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ((x * y) * z, x * (y * z));
      ASSERT_EQ(x * (y + z), x * y + x * z);
      ASSERT_TRUE((x - x).is_zero());
      ASSERT_EQ(x + (-x), R->zero());
    }
  }
}

TEST(GaloisRingProperty, IntegerRingMatchesModularArithmetic) {
  auto gen = oracle::rng(2);
  for (auto R : {GaloisRing::make(5, 3, 1), GaloisRing::make(2, 5, 1), GaloisRing::make(11, 2, 1)}) {
    std::uniform_int_distribution<Word> pick(0, R->q() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      Word a = pick(gen), b = pick(gen);
      ASSERT_EQ(R->mul(R->element(a), R->element(b)), R->element(a * b % R->q()));
      ASSERT_EQ(R->add(R->element(a), R->element(b)), R->element((a + b) % R->q()));
    }
  }
}

TEST(GaloisRingProperty, DigitsRecompose) {
  auto gen = oracle::rng(3);
  for (auto R : {GaloisRing::make(5, 3, 1), GaloisRing::make(3, 3, 2), GaloisRing::make(2, 4, 2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      GrElement x = R->random(gen);
      auto d = R->teich_digits(x).digits;
      ASSERT_EQ(d.size(), R->a());
      for (const auto& t : d) ASSERT_TRUE(R->is_teichmuller(t));
      ASSERT_EQ(R->from_digits(d), x);
    }
  }
}

TEST(GaloisRingProperty, UnitsAndValuation) {
  auto gen = oracle::rng(4);
  for (auto R : {GaloisRing::make(5, 3, 1), GaloisRing::make(3, 3, 2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      GrElement x = R->random(gen), y = R->random(gen);
      ASSERT_EQ(R->is_unit(x), R->valuation(x) == 0);
      if (!x.is_zero() && !y.is_zero() && R->valuation(x) + R->valuation(y) < R->a()) {
        ASSERT_EQ(R->valuation(x * y), R->valuation(x) + R->valuation(y));
      }
      if (R->is_unit(x)) {
        ASSERT_TRUE((x * R->inv(x)).is_one());
      }
    }
  }
}

TEST(GaloisRingProperty, TypeOfProducts) {
  auto gen = oracle::rng(5);
  auto R = GaloisRing::make(3, 3, 2);
  for (int trial = 0; trial < 300; ++trial) {
    GrElement x = R->random(gen), y = R->random(gen);
    if (!R->is_unit(x) || !R->is_unit(y)) continue;
    auto kx = R->classify_unit(x).kind, ky = R->classify_unit(y).kind;
    if (kx == UnitKind::Type0 && ky == UnitKind::Type0) {
      ASSERT_EQ(R->classify_unit(x * y).kind, UnitKind::Type0);
    }
    if (kx != ky) {
      ASSERT_EQ(R->classify_unit(x * y).kind, UnitKind::Type1);
    }
  }
}

}  // namespace

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

#include <algorithm>

#include "oracles.hpp"

namespace {

using namespace grcodes;

struct DeskCodes : ::testing::Test {
  RingPtr R = GaloisRing::make(5, 2, 1);
  QuotientPtr Q = QuotientRing::make(R, R->from_int(12), 1);
  ChainCode C(std::size_t i) const { return build_chain_code(Q, i); }
};

TEST_F(DeskCodes, Cardinality) {
  EXPECT_EQ(C(10).cardinality().value(), 1u);
  EXPECT_TRUE(C(10).is_zero_code());
  EXPECT_EQ(C(0).cardinality(), (PrimePower{5, 40}));
  EXPECT_TRUE(C(0).is_whole_ring());
  EXPECT_EQ(C(4).cardinality(), (PrimePower{5, 24}));
  for (std::size_t i = 0; i <= 10; ++i)
    EXPECT_EQ(echelon_basis(C(i)).log_cardinality(), 4 * (10 - i)) << "i=" << i;
}

TEST_F(DeskCodes, EchelonMatchesAdditiveClosure) {
  for (std::size_t i : {9u, 10u}) {
    auto closure = oracle::ideal_by_closure(*Q, C(i).generator);
    EXPECT_EQ(closure.size(), C(i).cardinality().value()) << "i=" << i;
  }
}

TEST_F(DeskCodes, EnumerationAtNine) {
  auto words = enumerate_codewords(C(9), 1'000'000);
  EXPECT_EQ(words.size(), 625u);
  std::set<oracle::Vec> distinct;
  for (const auto& w : words) {
    distinct.insert(w.data());
    EXPECT_TRUE(C(9).contains(w));
  }
  EXPECT_EQ(distinct, oracle::ideal_by_closure(*Q, C(9).generator));
}

TEST_F(DeskCodes, EnumerationOfZeroCode) {
  auto words = enumerate_codewords(C(10), 1);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_TRUE(words[0].is_zero());
}

TEST_F(DeskCodes, EnumerationAtEightHasNoDuplicates) {
  std::vector<WordVector> words;
  visit_codewords(C(8), 1'000'000, [&](const WordVector& w) { words.push_back(w); });
  EXPECT_EQ(words.size(), 390625u);
  std::sort(words.begin(), words.end());
  EXPECT_EQ(std::adjacent_find(words.begin(), words.end()), words.end());
  // Spot-check membership on a stride.
  for (std::size_t k = 0; k < words.size(); k += 9973) EXPECT_TRUE(C(8).contains(QrElement(Q.get(), words[k])));
}

TEST_F(DeskCodes, BudgetIsEnforced) {
  EXPECT_THROW(enumerate_codewords(C(8), 1000), BudgetExceeded);
}

TEST_F(DeskCodes, DualDescriptor) {
  ChainCode D = dual_descriptor(C(9));
  EXPECT_EQ(D.ctx->lambda(), R->from_int(23));
  EXPECT_EQ(D.ctx->alpha(), R->from_int(18));
  EXPECT_EQ(D.i, 1u);
  EXPECT_EQ(D.generator, D.ctx->from_poly(poly_from_ints(*R, {-18, 0, 0, 0, 1})));
  EXPECT_EQ(D.cardinality(), (PrimePower{5, 36}));
  EXPECT_TRUE(dual_descriptor(C(0)).is_zero_code());
  EXPECT_TRUE(dual_descriptor(C(10)).is_whole_ring());
}

TEST_F(DeskCodes, DualCertificates) {
  for (std::size_t i = 0; i <= 10; ++i) {
    DualCheck chk = verify_dual(C(i), dual_descriptor(C(i)));
    EXPECT_TRUE(chk.pass()) << "i=" << i;
    EXPECT_EQ(chk.log_code + chk.log_claimed, 40u);
  }
  EXPECT_FALSE(verify_dual(C(9), C(9)).pass());
  EXPECT_TRUE(verify_dual(C(10), dual_descriptor(C(10))).pass());
}

TEST_F(DeskCodes, DualOrthogonalityByEnumeration) {
  ChainCode D = dual_descriptor(C(9));
  for (const auto& c : oracle::ideal_by_closure(*Q, C(9).generator))
    for (const auto& d : D.spanning_rows()) ASSERT_TRUE(oracle::euclidean(*R, c, d).is_zero());
}

TEST_F(DeskCodes, SelfOrthogonality) {
  EXPECT_TRUE(self_orthogonal_formula(C(5)));
  EXPECT_FALSE(self_orthogonal_formula(C(4)));
  EXPECT_TRUE(self_orthogonal_formula(C(10)));
  EXPECT_FALSE(self_orthogonal_formula(C(0)));
  for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(self_orthogonal_formula(C(i)), self_orthogonal_bruteforce(C(i)));
}

TEST_F(DeskCodes, SelfDual) {
  auto sd = self_dual_enumerate(Q);
  ASSERT_EQ(sd.size(), 1u);
  EXPECT_EQ(sd[0].i, 5u);
  QrElement five = Q->constant(R->from_int(5));
  EXPECT_TRUE(sd[0].contains(five));
  EXPECT_EQ(ideal_echelon(*Q, five).log_cardinality(), echelon_basis(sd[0]).log_cardinality());
  // Brute force: self-orthogonal with |C|^2 = |R|^n.
  std::vector<std::size_t> found;
  for (std::size_t i = 0; i <= 10; ++i)
    if (self_orthogonal_bruteforce(C(i)) && 2 * echelon_basis(C(i)).log_cardinality() == 40) found.push_back(i);
  EXPECT_EQ(found, std::vector<std::size_t>{5});
}

TEST_F(DeskCodes, MultiConstacyclic) {
  auto Q17 = QuotientRing::make(R, R->from_int(17), 1);
  MultiMethod used{};
  EXPECT_TRUE(multi_constacyclic_equal(Q, Q17, 9, 1'000'000, &used));
  EXPECT_EQ(used, MultiMethod::Enumeration);
  EXPECT_TRUE(multi_constacyclic_equal(Q, Q17, 0, 1'000'000));
  EXPECT_TRUE(multi_constacyclic_equal(Q, Q17, 10, 1'000'000));
  EXPECT_TRUE(multi_constacyclic_equal(Q, Q17, 3, 1'000'000, &used));
  EXPECT_EQ(used, MultiMethod::Closure);
  // All four constants with xi0 = 7.
  std::vector<QuotientPtr> ctxs;
  for (int lam : {2, 12, 17, 22}) ctxs.push_back(QuotientRing::make(R, R->from_int(lam), 1));
  for (std::size_t i : {8u, 9u, 10u})
    for (std::size_t k = 1; k < ctxs.size(); ++k) EXPECT_TRUE(multi_constacyclic_equal(ctxs[0], ctxs[k], i, 1'000'000));
  auto Q23 = QuotientRing::make(R, R->from_int(23), 1);
  EXPECT_THROW(multi_constacyclic_equal(Q, Q23, 9, 1'000'000), PreconditionError);
}

TEST_F(DeskCodes, CodesAreConstacyclic) {
  for (std::size_t i = 0; i <= 10; ++i)
    for (const auto& row : C(i).spanning_rows()) ASSERT_TRUE(C(i).contains(Q->shift(QrElement(Q.get(), row))));
}

TEST(Codes, Type1ClassCount) {
  auto R = GaloisRing::make(5, 2, 1);
  EXPECT_EQ(count_type1_classes(*R), 4u);
  auto G = GaloisRing::make(3, 2, 2);
  EXPECT_EQ(count_type1_classes(*G), 8u);
  for (auto S : {R, G, GaloisRing::make(3, 3, 1)}) {
    std::set<Word> xi0s;
    for (const auto& u : oracle::units(*S)) {
      auto prof = S->classify_unit(u);
      if (prof.kind == UnitKind::Type1) xi0s.insert(S->index_of(prof.xi0));
    }
    EXPECT_EQ(xi0s.size(), count_type1_classes(*S));
    EXPECT_EQ(type1_classes_by_grouping(*S).size(), count_type1_classes(*S));
  }
}

struct ExtensionCodes : ::testing::Test {
  RingPtr R = GaloisRing::make(3, 2, 2);
  QuotientPtr Q = QuotientRing::make(R, R->add(R->xi(), R->from_int(3)), 1);
};

TEST_F(ExtensionCodes, CardinalityAndDuals) {
  for (std::size_t i = 0; i <= 6; ++i) {
    ChainCode c = build_chain_code(Q, i);
    EXPECT_EQ(echelon_basis(c).log_cardinality(), 8 * (6 - i));
    EXPECT_TRUE(verify_dual(c, dual_descriptor(c)).pass()) << "i=" << i;
    EXPECT_EQ(self_orthogonal_formula(c), self_orthogonal_bruteforce(c)) << "i=" << i;
  }
  auto closure = oracle::ideal_by_closure(*Q, build_chain_code(Q, 5).generator);
  EXPECT_EQ(closure.size(), 6561u);
}

TEST_F(ExtensionCodes, EnumerationMatchesClosure) {
  ChainCode c = build_chain_code(Q, 5);
  std::set<oracle::Vec> words;
  for (const auto& w : enumerate_codewords(c, 10'000)) words.insert(w.data());
  EXPECT_EQ(words, oracle::ideal_by_closure(*Q, c.generator));
}

}  // namespace

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

#include "oracles.hpp"

namespace {

using namespace grcodes;

struct Desk : ::testing::Test {
  RingPtr R = GaloisRing::make(5, 2, 1);
  QuotientPtr Q = QuotientRing::make(R, R->from_int(12), 1);
  ChainCode C(std::size_t i) const { return build_chain_code(Q, i); }
};

TEST_F(Desk, Weights) {
  EXPECT_EQ(rt_weight(Q->zero()), 0u);
  EXPECT_EQ(rt_weight(Q->one()), 1u);
  EXPECT_EQ(rt_weight(Q->add(Q->x_power(16), Q->x_power(3))), 17u);
  EXPECT_EQ(hamming_weight(Q->constant(R->from_int(5))), 1u);
  EXPECT_EQ(hamming_weight(Q->add(Q->x_power(16), Q->x_power(3))), 2u);
}

TEST_F(Desk, RtDistanceFormula) {
  const std::size_t expected[] = {1, 1, 1, 1, 1, 1, 5, 9, 13, 17, 0};
  for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(d_rt_formula(C(i)).value, expected[i]) << "i=" << i;
}

TEST_F(Desk, RtDistanceByEnumeration) {
  for (std::size_t i : {8u, 9u, 10u}) EXPECT_EQ(d_rt_bruteforce(C(i), 1'000'000).value, d_rt_formula(C(i)).value);
  auto closure = oracle::ideal_by_closure(*Q, C(9).generator);
  EXPECT_EQ(oracle::min_weight(closure, [](const oracle::Vec& v) { return oracle::rt_weight(v, 1); }), 17u);
}

TEST_F(Desk, HammingDistanceFormula) {
  const std::size_t expected[] = {1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 0};
  for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(d_h_formula(C(i)).value, expected[i]) << "i=" << i;
  for (std::size_t i = 6; i <= 9; ++i) {
    auto located = d_h_formula(C(i)).located;
    ASSERT_TRUE(located.has_value());
    EXPECT_EQ(located->tau0, 0u);
    EXPECT_EQ(located->beta0, i - 6);
  }
}

TEST_F(Desk, HammingDistanceByEnumeration) {
  EXPECT_EQ(d_h_bruteforce(C(9), 1'000'000).value, 5u);
  EXPECT_EQ(d_h_bruteforce(C(8), 1'000'000).value, 4u);
  auto closure = oracle::ideal_by_closure(*Q, C(9).generator);
  EXPECT_EQ(oracle::min_weight(closure, [](const oracle::Vec& v) { return oracle::hamming_weight(v, 1); }), 5u);
}

TEST_F(Desk, WeightOneWitness) {
  for (std::size_t i = 0; i <= 5; ++i) {
    auto w = weight_one_witness(C(i));
    ASSERT_TRUE(w.has_value()) << "i=" << i;
    EXPECT_EQ(hamming_weight(*w), 1u);
    EXPECT_TRUE(C(i).contains(*w));
  }
  EXPECT_FALSE(weight_one_witness(C(6)).has_value());
}

TEST_F(Desk, DistributionAtNine) {
  RtDistribution A = rt_distribution_formula(C(9));
  RtDistribution expected(21, 0);
  expected[0] = 1;
  expected[17] = 4;
  expected[18] = 20;
  expected[19] = 100;
  expected[20] = 500;
  EXPECT_EQ(A, expected);
  EXPECT_EQ(rt_distribution_enumerated(C(9), 1'000'000), expected);
  EXPECT_EQ(distribution_total(A), 625);
}

TEST_F(Desk, DistributionAtFive) {
  RtDistribution A = rt_distribution_formula(C(5));
  for (std::size_t j = 1; j <= 20; ++j) EXPECT_EQ(A[j], 4 * big_pow(5, j - 1)) << "j=" << j;
  EXPECT_EQ(distribution_total(A), big_pow(5, 20));
}

TEST_F(Desk, DistributionOfWholeRingAndZeroCode) {
  RtDistribution A = rt_distribution_formula(C(0));
  for (std::size_t j = 1; j <= 20; ++j) EXPECT_EQ(A[j], 24 * big_pow(25, j - 1));
  RtDistribution Z = rt_distribution_formula(C(10));
  EXPECT_EQ(Z[0], 1);
  EXPECT_EQ(distribution_total(Z), 1);
}

TEST_F(Desk, DistributionConsistency) {
  for (std::size_t i = 0; i <= 10; ++i) {
    RtDistribution A = rt_distribution_formula(C(i));
    EXPECT_EQ(distribution_total(A), C(i).cardinality().value()) << "i=" << i;
    EXPECT_EQ(A, rt_distribution_structural(C(i))) << "i=" << i;
  }
  bool enumerated = true;
  rt_distribution_oracle(C(4), 1'000'000, &enumerated);
  EXPECT_FALSE(enumerated);
}

TEST_F(Desk, PrintedDistributionDoesNotAlwaysSum) {
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i <= 10; ++i)
    if (distribution_total(rt_distribution_printed(C(i))) != C(i).cardinality().value()) ++mismatches;
  EXPECT_GT(mismatches, 0u);
}

// Cross-checks formula against enumeration on other parameter sets.
struct Family {
  Word p;
  unsigned a, m, s;
  std::vector<std::int64_t> lambda;
  std::vector<std::size_t> exponents;
};

class Distances : public ::testing::TestWithParam<Family> {};

TEST_P(Distances, FormulaMatchesEnumeration) {
  const Family& f = GetParam();
  auto R = GaloisRing::make(f.p, f.a, f.m);
  GrElement lambda = R->from_coeffs(f.lambda);
  if (f.m > 1) lambda = R->add(R->xi(), R->from_int(static_cast<std::int64_t>(f.p)));
  auto Q = QuotientRing::make(R, lambda, f.s);
  for (std::size_t i : f.exponents) {
    ChainCode c = build_chain_code(Q, i);
    EXPECT_EQ(d_rt_formula(c).value, d_rt_bruteforce(c, 1'000'000).value) << "i=" << i;
    EXPECT_EQ(d_h_formula(c).value, d_h_bruteforce(c, 1'000'000).value) << "i=" << i;
    EXPECT_EQ(rt_distribution_formula(c), rt_distribution_enumerated(c, 1'000'000)) << "i=" << i;
  }
  for (std::size_t i = 0; i <= Q->nilpotency(); ++i) {
    ChainCode c = build_chain_code(Q, i);
    EXPECT_EQ(rt_distribution_formula(c), rt_distribution_structural(c)) << "i=" << i;
  }
}

INSTANTIATE_TEST_SUITE_P(Parameters, Distances,
                         ::testing::Values(Family{5, 3, 1, 1, {12}, {13, 14, 15}},
                                           Family{13, 2, 1, 1, {2}, {25, 26}},
                                           Family{5, 2, 1, 2, {12}, {49, 50}},
                                           Family{3, 2, 2, 1, {}, {5, 6}}));

TEST(DistancesGuarded, HammingFormulaNeedsTheGuard) {
  auto R = GaloisRing::make(3, 2, 1);
  auto Q = QuotientRing::make(R, R->from_int(2), 1, QuotientMode::Chain, true);
  EXPECT_THROW(d_h_formula(build_chain_code(Q, 5)), PreconditionError);
}

}  // namespace

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

// Walks the ideal chain of Z_25[x]/<x^20 - 12>: for each exponent i prints
// the code size, both distances and whether the code is self-orthogonal,
// then lists the nonzero RT weight counts of the smallest nonzero code.

#include <cstdio>

#include "grcodes.hpp"

int main() {
  using namespace grcodes;
  RingPtr R = GaloisRing::make(5, 2, 1);
  QuotientPtr Q = QuotientRing::make(R, R->from_int(12), 1);
  std::printf("%s[x]/<x^%zu-%s>, alpha = %s, chain length %zu\n\n", R->describe().c_str(), Q->n(),
              Q->lambda().str().c_str(), Q->alpha().str().c_str(), Q->nilpotency());
  std::printf("%3s  %-6s  %5s  %5s  %s\n", "i", "|C|", "d_RT", "d_H", "self-orthogonal");
  for (std::size_t i = 0; i <= Q->nilpotency(); ++i) {
    ChainCode c = build_chain_code(Q, i);
    std::printf("%3zu  %-6s  %5zu  %5zu  %s\n", i, c.cardinality().str().c_str(), d_rt_formula(c).value,
                d_h_formula(c).value, self_orthogonal_formula(c) ? "yes" : "no");
  }

  ChainCode last = build_chain_code(Q, Q->nilpotency() - 1);
  std::printf("\nRT weights of <(x^4-7)^%zu>:\n", last.i);
  RtDistribution A = rt_distribution_enumerated(last, 1'000'000);
  for (std::size_t j = 1; j < A.size(); ++j)
    if (A[j] != 0) std::printf("  A_%zu = %s\n", j, A[j].str().c_str());

  ChainCode dual = dual_descriptor(last);
  std::printf("\ndual: <(x^4-%s)^%zu> over lambda^{-1} = %s, certified %s\n", dual.ctx->alpha().str().c_str(),
              dual.i, dual.ctx->lambda().str().c_str(), verify_dual(last, dual).pass() ? "yes" : "no");
  return 0;
}

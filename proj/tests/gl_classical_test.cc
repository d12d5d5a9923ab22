// Copyright 2026 The glq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "glq/gl_classical.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

namespace glq {
namespace {

TEST(DeriveParams, FormulaValues) {
  // n / (2 (1 - 1/2) eps^2) + 1 = 33 at n = 8, eps = 1/2.
  const DecoderParams p = derive_params(8, 0.5, 0.5);
  EXPECT_EQ(p.k, 6);
  EXPECT_EQ(p.votes, 63u);
  EXPECT_EQ(p.candidate_budget, 64u);
  EXPECT_EQ(derive_params(32, 0.125, 0.5).k, 12);
  EXPECT_EQ(derive_params(32, 0.0625, 0.5).k, 14);
  EXPECT_THROW(derive_params(8, 0.0, 0.5), std::invalid_argument);
  EXPECT_THROW(derive_params(8, 0.25, 1.0), std::invalid_argument);
}

TEST(DeriveParams, MonotoneInEpsilonAndTarget) {
  int last = 0;
  for (double eps : {0.5, 0.25, 0.125, 0.0625, 0.03125}) {
    const int k = derive_params(16, eps, 0.5).k;
    EXPECT_GT(k, last);
    last = k;
  }
  EXPECT_LE(derive_params(16, 0.125, 0.5).k, derive_params(16, 0.125, 0.9).k);
}

TEST(DecoderParams, Validation) {
  DecoderParams p{3, 6, 8, 0.5};
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {3, 7, 9, 0.5};
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {0, 0, 1, 0.5};
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(DecodeCandidates, MatchesBruteForceMajority) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 8));
    const int k = 1 + static_cast<int>(uniform_below(rng, 6));
    const std::size_t seeds = std::size_t{1} << k;
    std::vector<std::uint8_t> votes(seeds * n);
    for (auto& v : votes) v = rng() & 1;
    const auto fast = decode_candidates(n, k, votes);
    ASSERT_EQ(fast.size(), seeds);
    for (std::uint64_t sigma = 0; sigma < seeds; ++sigma) {
      for (int j = 0; j < n; ++j) {
        int ones = 0, zeros = 0;
        for (std::uint64_t J = 1; J < seeds; ++J) {
          const bool guess = votes[j * seeds + J] ^ (std::popcount(sigma & J) & 1);
          guess ? ++ones : ++zeros;
        }
        EXPECT_EQ(fast[sigma].get(j), ones > zeros) << n << " " << k << " " << sigma;
      }
    }
  }
}

TEST(DecodeCandidates, RejectsWrongSize) {
  std::vector<std::uint8_t> votes(10);
  EXPECT_THROW(decode_candidates(3, 2, votes), std::invalid_argument);
}

TEST(SolveClassical, NoiselessAlwaysSucceeds) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PlantedInstance inst =
        make_instance({IpFamily::kBiasedSet, 10, 0.5, seed, std::nullopt});
    const DecoderParams p = derive_params(10, 0.5, 0.5);
    const SolveReport r = solve_classical(inst.ip, inst.eq, p, rng);
    ASSERT_TRUE(r.success());
    EXPECT_EQ(*r.found, inst.secret);
  }
}

TEST(SolveClassical, QueryCountIsExact) {
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PlantedInstance inst =
        make_instance({IpFamily::kBiasedSet, 10, 0.125, seed, std::nullopt});
    const DecoderParams p = derive_params(10, 0.125, 0.5);
    const SolveReport r = solve_classical(inst.ip, inst.eq, p, rng);
    EXPECT_EQ(r.tally.ip_forward, 10u * ((1u << p.k) - 1));
    EXPECT_EQ(r.tally.ip_inverse, 0u);
    EXPECT_EQ(r.tally.eq, r.rounds);
    EXPECT_EQ(r.tally, inst.ip.tally() + inst.eq.tally());
    if (r.success()) EXPECT_EQ(*r.found, inst.secret);
  }
}

TEST(SolveClassical, MeetsTargetOnBiasedSet) {
  Rng rng(7);
  int wins = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    PlantedInstance inst = make_instance(
        {IpFamily::kBiasedSet, 12, 0.125, static_cast<std::uint64_t>(t), std::nullopt});
    wins += solve_classical(inst.ip, inst.eq, derive_params(12, 0.125, 0.5), rng).success();
  }
  EXPECT_GE(wins, trials / 2);
}

TEST(SolveClassical, LazyOracleAtLargeN) {
  Rng rng(8);
  const BitString a(40, 0x123456789aULL);
  IpOracle ip = IpOracle::lazy_biased(40, 0.25, a, rng);
  EqOracle eq = EqOracle::for_secret(a);
  const SolveReport r = solve_classical(ip, eq, derive_params(40, 0.25, 0.5), rng);
  if (r.success()) EXPECT_EQ(*r.found, a);
  EXPECT_EQ(r.tally.ip_forward, ip.tally().ip_forward);
}

TEST(SolveClassical, SeedDeterminism) {
  auto run = [] {
    Rng rng(99);
    PlantedInstance inst =
        make_instance({IpFamily::kBiasedSet, 10, 0.125, 5, std::nullopt});
    return solve_classical(inst.ip, inst.eq, derive_params(10, 0.125, 0.5), rng);
  };
  const SolveReport a = run(), b = run();
  EXPECT_EQ(a.tally, b.tally);
  EXPECT_EQ(a.rounds, b.rounds);
  EXPECT_EQ(a.found.has_value(), b.found.has_value());
}

}  // namespace
}  // namespace glq

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

#include "glq/gl_quantum.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace glq {
namespace {

PlantedInstance planted(int n, double eps, std::uint64_t seed) {
  return make_instance({IpFamily::kBiasedSet, n, eps, seed, std::nullopt});
}

// (1/2^n) sum_x (alpha_x^2 - beta_x^2) computed straight from the oracle's
// table, independent of the circuit.
double independent_overlap(const IpOracle& o) {
  const BitString& a = *o.secret();
  double sum = 0.0;
  const std::uint64_t size = std::uint64_t{1} << o.n();
  for (std::uint64_t x = 0; x < size; ++x) {
    const bool correct = o.deterministic_answer(x) == dot(a, BitString(o.n(), x));
    const double c = std::cos(o.angle(x));
    const double alpha2 = correct ? c * c : 1 - c * c;
    sum += alpha2 - (1 - alpha2);
  }
  return sum / static_cast<double>(size);
}

TEST(CircuitC, BernsteinVaziraniCaseIsExact) {
  for (int n : {4, 8, 12}) {
    PlantedInstance inst = planted(n, 0.5, 17 + n);
    const CircuitCOutput out = run_circuit_c(inst.ip);
    EXPECT_NEAR(prefix_probability(out.state, inst.secret), 1.0, 1e-9);
  }
}

TEST(CircuitC, TallyIsOneForwardOneInverse) {
  PlantedInstance inst = planted(5, 0.25, 3);
  run_circuit_c(inst.ip);
  EXPECT_EQ(inst.ip.tally().ip_forward, 1u);
  EXPECT_EQ(inst.ip.tally().ip_inverse, 1u);
  EXPECT_EQ(inst.eq.tally().eq, 0u);
}

TEST(CircuitC, LayoutAndAdjoint) {
  PlantedInstance inst = planted(4, 0.25, 4);
  EXPECT_EQ(circuit_qubits(inst.ip), 6);
  StateVector wrong(5);
  EXPECT_THROW(apply_circuit_c(wrong, inst.ip), std::invalid_argument);
  Rng rng(1);
  StateVector s = start_state(inst.ip);
  for (int q = 0; q < 6; ++q) s.apply(Gate::h(q));
  s.apply(Gate::z(2));
  const StateVector before = s;
  apply_circuit_c(s, inst.ip);
  apply_circuit_c_adjoint(s, inst.ip);
  EXPECT_LE(max_abs_diff(s, before), 1e-9);
}

TEST(CircuitC, OverlapIdentityBiasedSet) {
  for (int n : {6, 8, 10}) {
    for (double eps : {0.125, 0.25}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        PlantedInstance inst = planted(n, eps, seed);
        const CircuitCOutput out = run_circuit_c(inst.ip);
        const double ov = overlap_with_target(out, inst.secret);
        EXPECT_NEAR(ov, 2 * eps, 1e-9);
        EXPECT_NEAR(ov, independent_overlap(inst.ip), 1e-9);
        EXPECT_GE(prefix_probability(out.state, inst.secret), 4 * eps * eps - 1e-9);
      }
    }
  }
}

TEST(CircuitC, OverlapIdentityRotation) {
  Rng rng(5);
  for (double theta : {0.1, std::numbers::pi / 6, 0.5}) {
    const BitString a = BitString::parse("101101");
    IpOracle o = IpOracle::rotation(6, 0.0, a, constant_angle(theta), rng);
    const CircuitCOutput out = run_circuit_c(o);
    EXPECT_NEAR(overlap_with_target(out, a), std::cos(2 * theta), 1e-9);
    EXPECT_NEAR(overlap_with_target(out, a), independent_overlap(o), 1e-9);
  }
}

TEST(CircuitC, OverlapIdentityVaryingAngles) {
  Rng rng(6);
  const BitString a = BitString::parse("0111");
  IpOracle o = IpOracle::rotation(
      4, 0.0, a, [](std::uint64_t, Rng& r) { return uniform_unit(r) * 0.7; }, rng);
  EXPECT_NEAR(overlap_with_target(run_circuit_c(o), a), independent_overlap(o), 1e-9);
}

TEST(Grover, OptimalIterations) {
  EXPECT_EQ(optimal_iterations(0.125), 3);
  EXPECT_EQ(optimal_iterations(0.5), 0);
  EXPECT_THROW(optimal_iterations(0.0), std::invalid_argument);
}

TEST(Grover, AmplifiesToPredictedProbability) {
  PlantedInstance inst = planted(6, 0.125, 8);
  const double theta = std::asin(0.25);
  StateVector s = run_circuit_c(inst.ip).state;
  for (int k = 1; k <= 3; ++k) {
    s = grover_iterate(std::move(s), inst.ip, inst.eq);
    const double expect = std::pow(std::sin((2 * k + 1) * theta), 2);
    EXPECT_NEAR(prefix_probability(s, inst.secret), expect, 1e-9) << k;
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
  }
  EXPECT_GE(prefix_probability(s, inst.secret), 0.9);
}

TEST(Grover, IterateTallies) {
  PlantedInstance inst = planted(4, 0.25, 9);
  StateVector s = start_state(inst.ip);
  s = grover_iterate(std::move(s), inst.ip, inst.eq);
  EXPECT_EQ(inst.ip.tally().ip_forward, 2u);
  EXPECT_EQ(inst.ip.tally().ip_inverse, 2u);
  EXPECT_EQ(inst.eq.tally().eq, 1u);
}

TEST(Grover, IterateThenInverseIsIdentity) {
  PlantedInstance inst = planted(5, 0.125, 10);
  StateVector s = start_state(inst.ip);
  for (int q = 0; q < 7; ++q) s.apply(Gate::h(q));
  s.apply(Gate::cz(0, 3));
  const StateVector before = s;
  s = grover_iterate(std::move(s), inst.ip, inst.eq);
  // Both factors are self-inverse, so the inverse applies them in reverse.
  reflect_about_start(s, inst.ip);
  inst.eq.apply_phase(s);
  EXPECT_LE(max_abs_diff(s, before), 1e-9);
}

TEST(Naive, HalfBiasSucceedsFirstRound) {
  Rng rng(11);
  PlantedInstance inst = planted(8, 0.5, 11);
  const SolveReport r = solve_naive(inst.ip, inst.eq, 5, rng);
  ASSERT_TRUE(r.success());
  EXPECT_EQ(*r.found, inst.secret);
  EXPECT_EQ(r.rounds, 1u);
}

TEST(Naive, BudgetFromSingleShotBound) {
  Rng rng(12);
  int wins = 0;
  for (int trial = 0; trial < 200; ++trial) {
    PlantedInstance inst = planted(6, 0.125, 1000 + trial);
    const SolveReport r = solve_naive(inst.ip, inst.eq, 48, rng);
    if (r.success()) {
      EXPECT_EQ(*r.found, inst.secret);
      ++wins;
    }
    EXPECT_EQ(r.tally.ip_forward, r.rounds);
    EXPECT_EQ(r.tally.ip_inverse, r.rounds);
    EXPECT_EQ(r.tally.eq, r.rounds);
  }
  EXPECT_GE(wins, 100);
  PlantedInstance inst = planted(4, 0.25, 0);
  EXPECT_THROW(solve_naive(inst.ip, inst.eq, 0, rng), std::invalid_argument);
}

TEST(QSearch, HalfBiasCostsAtMostFourIpQueries) {
  Rng rng(13);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PlantedInstance inst = planted(8, 0.5, seed);
    const SolveReport r = solve_qsearch(inst.ip, inst.eq, {}, rng);
    ASSERT_TRUE(r.success());
    EXPECT_EQ(*r.found, inst.secret);
    EXPECT_LE(r.tally.ip_total(), 4u);
  }
}

TEST(QSearch, AccountingMatchesOracles) {
  Rng rng(14);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    PlantedInstance inst = planted(8, 0.0625, seed);
    const SolveReport r = solve_qsearch(inst.ip, inst.eq, {}, rng);
    EXPECT_EQ(r.tally, inst.ip.tally() + inst.eq.tally());
    ASSERT_TRUE(r.success());
    EXPECT_EQ(*r.found, inst.secret);
    // IP queries come in forward/inverse pairs, and every attempt ends with
    // one classical EQ.
    EXPECT_EQ(r.tally.ip_forward, r.tally.ip_inverse);
  }
}

TEST(QSearch, ParamsValidated) {
  Rng rng(15);
  PlantedInstance inst = planted(4, 0.25, 0);
  QSearchParams bad;
  bad.growth = 2.5;
  EXPECT_THROW(solve_qsearch(inst.ip, inst.eq, bad, rng), std::invalid_argument);
  bad = {};
  bad.max_rounds = 0;
  EXPECT_THROW(solve_qsearch(inst.ip, inst.eq, bad, rng), std::invalid_argument);
}

TEST(QSearch, RotationFamilySucceeds) {
  Rng rng(16);
  const BitString a = BitString::parse("1100101");
  IpOracle ip = IpOracle::rotation(7, 0.125, a, bias_angle(0.125), rng);
  EqOracle eq = EqOracle::for_secret(a);
  const SolveReport r = solve_qsearch(ip, eq, {}, rng);
  ASSERT_TRUE(r.success());
  EXPECT_EQ(*r.found, a);
}

}  // namespace
}  // namespace glq

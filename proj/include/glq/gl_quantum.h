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

#pragma once

#include <cstdint>
#include <optional>

#include "glq/bitstring.h"
#include "glq/oracles.h"
#include "glq/random.h"
#include "glq/statevector.h"

namespace glq {

// Result of C|0^n, 0^m, 0> with register layout [n input][m ancilla][1 target].
struct CircuitCOutput {
  StateVector state;
  int oracle_n;
  int oracle_m;
};

struct QSearchParams {
  // Schedule growth factor, 1 < growth < 2.
  double growth = 6.0 / 5.0;
  int max_rounds = 40;

  void validate() const;
};

struct SolveReport {
  std::optional<BitString> found;
  QueryTally tally;
  // Quantum: search rounds (naive: attempts). Classical: candidates checked.
  std::uint64_t rounds = 0;
  // Logical gate and oracle applications across all simulated circuits.
  std::uint64_t gate_ops = 0;

  bool success() const { return found.has_value(); }
  std::uint64_t total_queries() const { return tally.total_queries(); }
};

// Qubit count n + m + 1 of the circuit for an n-bit oracle.
int circuit_qubits(const IpOracle& oracle);

StateVector start_state(const IpOracle& oracle);

// C = C5 C4 C3 C2 C1 in place: H^n and NOT on the target, U_IP, CZ on the last
// two qubits, U_IP^dagger, H^n.
void apply_circuit_c(StateVector& state, IpOracle& oracle);
void apply_circuit_c_adjoint(StateVector& state, IpOracle& oracle);

CircuitCOutput run_circuit_c(IpOracle& oracle);

// Real part of <a, 0^m, 1| C |0^n, 0^m, 0>. Throws std::domain_error if the
// imaginary part exceeds kStateTolerance.
double overlap_with_target(const CircuitCOutput& out, const BitString& a);

// -C U_0 C^dagger: reflection about C|0...0>.
void reflect_about_start(StateVector& state, IpOracle& ip);

// One amplitude-amplification iterate -C U_0 C^dagger U_EQ.
StateVector grover_iterate(StateVector state, IpOracle& ip, EqOracle& eq);

// floor(pi / (4 asin(2 epsilon))): iterations that maximise the success
// probability when the good amplitude is exactly 2 epsilon.
int optimal_iterations(double epsilon);

// Repeat {C, measure, EQ} up to `budget` times.
SolveReport solve_naive(IpOracle& ip, EqOracle& eq, std::uint64_t budget,
                        Rng& rng);

// Amplitude amplification with an unknown success probability. Round t
// applies k iterates, k uniform over the integers below c^(t-1).
SolveReport solve_qsearch(IpOracle& ip, EqOracle& eq,
                          const QSearchParams& params, Rng& rng);

}  // namespace glq

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

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace glq {

void QSearchParams::validate() const {
  if (!(growth > 1.0 && growth < 2.0)) {
    throw std::invalid_argument("qsearch growth factor must lie in (1, 2)");
  }
  if (max_rounds < 1) {
    throw std::invalid_argument("qsearch max_rounds must be >= 1");
  }
}

int circuit_qubits(const IpOracle& oracle) {
  return oracle.n() + oracle.ancilla_qubits() + 1;
}

StateVector start_state(const IpOracle& oracle) {
  return StateVector(circuit_qubits(oracle));
}

namespace {

void check_layout(const StateVector& state, const IpOracle& oracle) {
  if (state.num_qubits() != circuit_qubits(oracle)) {
    throw std::invalid_argument(
        "circuit C: state has " + std::to_string(state.num_qubits()) +
        " qubits, layout needs " + std::to_string(circuit_qubits(oracle)));
  }
}

void hadamard_inputs(StateVector& state, int n) {
  for (int q = 0; q < n; ++q) state.apply(Gate::h(q));
}

SolveReport finish(const IpOracle& ip, const EqOracle& eq,
                   const QueryTally& ip_before, const QueryTally& eq_before,
                   SolveReport report) {
  report.tally = (ip.tally() - ip_before) + (eq.tally() - eq_before);
  return report;
}

// One measured attempt with k iterates; returns the EQ-confirmed prefix.
std::optional<BitString> attempt(IpOracle& ip, EqOracle& eq, std::uint64_t k,
                                 Rng& rng, std::uint64_t& gate_ops) {
  StateVector state = start_state(ip);
  apply_circuit_c(state, ip);
  for (std::uint64_t i = 0; i < k; ++i) {
    eq.apply_phase(state);
    reflect_about_start(state, ip);
  }
  gate_ops += state.ops();
  const BitString guess = sample_measurement(state, rng).prefix(ip.n());
  if (eq.query(guess)) return guess;
  return std::nullopt;
}

}  // namespace

void apply_circuit_c(StateVector& state, IpOracle& oracle) {
  check_layout(state, oracle);
  const int n = oracle.n();
  const int last = state.num_qubits() - 1;
  hadamard_inputs(state, n);
  state.apply(Gate::x(last));
  oracle.apply(state, Direction::kForward);
  state.apply(Gate::cz(last - 1, last));
  oracle.apply(state, Direction::kInverse);
  hadamard_inputs(state, n);
}

void apply_circuit_c_adjoint(StateVector& state, IpOracle& oracle) {
  check_layout(state, oracle);
  const int n = oracle.n();
  const int last = state.num_qubits() - 1;
  hadamard_inputs(state, n);
  oracle.apply(state, Direction::kForward);
  state.apply(Gate::cz(last - 1, last));
  oracle.apply(state, Direction::kInverse);
  state.apply(Gate::x(last));
  hadamard_inputs(state, n);
}

CircuitCOutput run_circuit_c(IpOracle& oracle) {
  StateVector state = start_state(oracle);
  apply_circuit_c(state, oracle);
  return {std::move(state), oracle.n(), oracle.ancilla_qubits()};
}

double overlap_with_target(const CircuitCOutput& out, const BitString& a) {
  if (a.size() != out.oracle_n) {
    throw std::invalid_argument("overlap_with_target: |a| != n");
  }
  // |a, 0^m, 1>.
  const int tail = out.oracle_m + 1;
  const std::uint64_t index = (a.value() << tail) | 1;
  const Amplitude amp = out.state.amplitude(index);
  if (std::abs(amp.imag()) > kStateTolerance) {
    throw std::domain_error("overlap_with_target: amplitude is not real");
  }
  return amp.real();
}

void reflect_about_start(StateVector& state, IpOracle& ip) {
  apply_circuit_c_adjoint(state, ip);
  state.apply(Gate::reflect_zero());
  apply_circuit_c(state, ip);
  for (Amplitude& a : state.mutable_amplitudes()) a = -a;
}

StateVector grover_iterate(StateVector state, IpOracle& ip, EqOracle& eq) {
  check_layout(state, ip);
  eq.apply_phase(state);
  reflect_about_start(state, ip);
  return state;
}

int optimal_iterations(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw std::invalid_argument("optimal_iterations: epsilon out of range");
  }
  return static_cast<int>(
      std::floor(std::numbers::pi / (4.0 * std::asin(2.0 * epsilon))));
}

SolveReport solve_naive(IpOracle& ip, EqOracle& eq, std::uint64_t budget,
                        Rng& rng) {
  if (budget < 1) {
    throw std::invalid_argument("solve_naive: budget must be >= 1");
  }
  const QueryTally ip_before = ip.tally();
  const QueryTally eq_before = eq.tally();
  SolveReport report;
  for (std::uint64_t round = 1; round <= budget; ++round) {
    report.rounds = round;
    if (auto hit = attempt(ip, eq, 0, rng, report.gate_ops)) {
      report.found = *hit;
      break;
    }
  }
  return finish(ip, eq, ip_before, eq_before, std::move(report));
}

SolveReport solve_qsearch(IpOracle& ip, EqOracle& eq,
                          const QSearchParams& params, Rng& rng) {
  params.validate();
  const QueryTally ip_before = ip.tally();
  const QueryTally eq_before = eq.tally();
  SolveReport report;
  // m starts at 1, so the first round is always a plain attempt.
  double m = 1.0;
  for (int round = 1; round <= params.max_rounds; ++round) {
    report.rounds = static_cast<std::uint64_t>(round);
    const auto limit = static_cast<std::uint64_t>(std::ceil(m - 1e-12));
    const std::uint64_t k = uniform_below(rng, limit);
    if (auto hit = attempt(ip, eq, k, rng, report.gate_ops)) {
      report.found = *hit;
      break;
    }
    m *= params.growth;
  }
  return finish(ip, eq, ip_before, eq_before, std::move(report));
}

}  // namespace glq

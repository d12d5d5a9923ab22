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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "glq/bitstring.h"
#include "glq/random.h"

namespace glq {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;
inline constexpr double kStateTolerance = 1e-9;

// Raised when a simulation would exceed kMaxQubits.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GateKind { kH, kX, kZ, kCZ, kReflectZero, kPhaseFlipPrefix };

// ReflectZero negates the amplitude of every basis state whose target qubits
// are all zero (all qubits when targets is empty), i.e. I - 2|0><0|.
// PhaseFlipPrefix negates every basis state whose leading |pattern| qubits
// spell `pattern`.
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  std::optional<BitString> pattern;

  static Gate h(int q) { return {GateKind::kH, {q}, std::nullopt}; }
  static Gate x(int q) { return {GateKind::kX, {q}, std::nullopt}; }
  static Gate z(int q) { return {GateKind::kZ, {q}, std::nullopt}; }
  static Gate cz(int a, int b) { return {GateKind::kCZ, {a, b}, std::nullopt}; }
  static Gate reflect_zero(std::vector<int> targets = {}) {
    return {GateKind::kReflectZero, std::move(targets), std::nullopt};
  }
  static Gate phase_flip_prefix(const BitString& pattern) {
    return {GateKind::kPhaseFlipPrefix, {}, pattern};
  }
};

// Dense pure state over q qubits. Qubit 0 is the leftmost ket symbol and the
// most significant bit of the amplitude index.
class StateVector {
 public:
  // |0...0>.
  explicit StateVector(int num_qubits);

  static StateVector basis(int num_qubits, const BitString& label);
  // Requires a power-of-two length and unit norm within kStateTolerance.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> mutable_amplitudes() { return amplitudes_; }
  Amplitude amplitude(std::uint64_t index) const { return amplitudes_.at(index); }

  void apply(const Gate& gate);

  double norm_squared() const;

  // Logical operation counter: gates plus oracle applications.
  std::uint64_t ops() const { return ops_; }
  void count_ops(std::uint64_t k) { ops_ += k; }

  // Index bit that holds qubit q.
  int shift_of(int q) const { return num_qubits_ - 1 - q; }

 private:
  void check_qubit(int q) const;

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
  std::uint64_t ops_ = 0;
};

StateVector basis_state(int num_qubits, const BitString& label);

StateVector apply_gate(StateVector state, const Gate& gate);

// <s1|s2>.
Amplitude overlap(const StateVector& s1, const StateVector& s2);

// Probability that the leading |prefix| qubits measure as `prefix`.
double prefix_probability(const StateVector& state, const BitString& prefix);

BitString sample_measurement(const StateVector& state, Rng& rng);

// Largest componentwise |a_i - b_i|.
double max_abs_diff(const StateVector& a, const StateVector& b);

}  // namespace glq

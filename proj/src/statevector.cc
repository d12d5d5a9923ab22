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

#include "glq/statevector.h"

#include <algorithm>
#include <cmath>

namespace glq {

namespace {

void check_qubit_count(int q) {
  if (q < 1) {
    throw std::invalid_argument("StateVector: need at least one qubit");
  }
  if (q > kMaxQubits) {
    throw ResourceLimitError("StateVector: " + std::to_string(q) +
                             " qubits exceeds limit of " +
                             std::to_string(kMaxQubits));
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, const BitString& label) {
  if (label.size() != num_qubits) {
    throw std::invalid_argument("basis_state: label length " +
                                std::to_string(label.size()) +
                                " != qubit count " +
                                std::to_string(num_qubits));
  }
  StateVector s(num_qubits);
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[label.value()] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw std::invalid_argument(
        "StateVector: amplitude count must be a power of two >= 2");
  }
  const int q = std::countr_zero(size);
  StateVector s(q);
  s.amplitudes_ = std::move(amplitudes);
  if (std::abs(s.norm_squared() - 1.0) > kStateTolerance) {
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
  }
  return s;
}

void StateVector::check_qubit(int q) const {
  if (q < 0 || q >= num_qubits_) {
    throw std::invalid_argument("gate target " + std::to_string(q) +
                                " outside 0.." +
                                std::to_string(num_qubits_ - 1));
  }
}

void StateVector::apply(const Gate& gate) {
  for (std::size_t i = 0; i < gate.targets.size(); ++i) {
    check_qubit(gate.targets[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.targets[i] == gate.targets[j]) {
        throw std::invalid_argument("gate targets must be distinct");
      }
    }
  }
  const auto expect_targets = [&](std::size_t count) {
    if (gate.targets.size() != count) {
      throw std::invalid_argument("gate expects " + std::to_string(count) +
                                  " target(s)");
    }
  };
  const std::size_t dim = amplitudes_.size();

  switch (gate.kind) {
    case GateKind::kH: {
      expect_targets(1);
      const std::size_t bit = std::size_t{1} << shift_of(gate.targets[0]);
      const double r = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amplitudes_[i];
        const Amplitude a1 = amplitudes_[i | bit];
        amplitudes_[i] = r * (a0 + a1);
        amplitudes_[i | bit] = r * (a0 - a1);
      }
      break;
    }
    case GateKind::kX: {
      expect_targets(1);
      const std::size_t bit = std::size_t{1} << shift_of(gate.targets[0]);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & bit)) std::swap(amplitudes_[i], amplitudes_[i | bit]);
      }
      break;
    }
    case GateKind::kZ: {
      expect_targets(1);
      const std::size_t bit = std::size_t{1} << shift_of(gate.targets[0]);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) amplitudes_[i] = -amplitudes_[i];
      }
      break;
    }
    case GateKind::kCZ: {
      expect_targets(2);
      const std::size_t mask = (std::size_t{1} << shift_of(gate.targets[0])) |
                               (std::size_t{1} << shift_of(gate.targets[1]));
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) amplitudes_[i] = -amplitudes_[i];
      }
      break;
    }
    case GateKind::kReflectZero: {
      std::size_t mask = 0;
      if (gate.targets.empty()) {
        mask = dim - 1;
      } else {
        for (int q : gate.targets) mask |= std::size_t{1} << shift_of(q);
      }
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) == 0) amplitudes_[i] = -amplitudes_[i];
      }
      break;
    }
    case GateKind::kPhaseFlipPrefix: {
      if (!gate.pattern) {
        throw std::invalid_argument("PhaseFlipPrefix requires a pattern");
      }
      const int len = gate.pattern->size();
      if (len > num_qubits_) {
        throw std::invalid_argument("PhaseFlipPrefix pattern longer than state");
      }
      const int tail = num_qubits_ - len;
      const std::size_t begin = static_cast<std::size_t>(gate.pattern->value())
                                << tail;
      const std::size_t end = begin + (std::size_t{1} << tail);
      for (std::size_t i = begin; i < end; ++i) amplitudes_[i] = -amplitudes_[i];
      break;
    }
  }
  ++ops_;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amplitudes_) total += std::norm(a);
  return total;
}

StateVector basis_state(int num_qubits, const BitString& label) {
  return StateVector::basis(num_qubits, label);
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

Amplitude overlap(const StateVector& s1, const StateVector& s2) {
  if (s1.num_qubits() != s2.num_qubits()) {
    throw std::invalid_argument("overlap: qubit count mismatch");
  }
  Amplitude total = 0.0;
  const auto a = s1.amplitudes();
  const auto b = s2.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

double prefix_probability(const StateVector& state, const BitString& prefix) {
  const int len = prefix.size();
  if (len > state.num_qubits()) {
    throw std::invalid_argument("prefix_probability: prefix longer than state");
  }
  const int tail = state.num_qubits() - len;
  const std::size_t begin = static_cast<std::size_t>(prefix.value()) << tail;
  const std::size_t end = begin + (std::size_t{1} << tail);
  double total = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = begin; i < end; ++i) total += std::norm(amps[i]);
  return total;
}

BitString sample_measurement(const StateVector& state, Rng& rng) {
  const auto amps = state.amplitudes();
  const double u = uniform_unit(rng) * state.norm_squared();
  double acc = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    last_nonzero = i;
    acc += p;
    if (u < acc) {
      return BitString(state.num_qubits(), i);
    }
  }
  // Rounding left u just above the accumulated mass.
  return BitString(state.num_qubits(), last_nonzero);
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("max_abs_diff: qubit count mismatch");
  }
  double worst = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::abs(x[i] - y[i]));
  }
  return worst;
}

}  // namespace glq

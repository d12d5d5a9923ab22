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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "glq/bitstring.h"
#include "glq/random.h"
#include "glq/reduction.h"
#include "glq/statevector.h"

namespace glq {

// Message Alice sends in the commit phase: b = f(a), x, c = z ^ a.x.
struct BitCommitment {
  BitString b;
  BitString x;
  bool c;
};

struct Opening {
  BitString a;
};

struct QubitCommitment {
  StateVector masked_state;  // one qubit
  BitString b1;
  BitString b2;
  BitString x1;
  BitString x2;
};

struct QubitOpening {
  BitString a1;
  BitString a2;
};

std::pair<BitCommitment, Opening> commit_bit(const Permutation& f, bool z,
                                             Rng& rng);
// Deterministic variant with caller-chosen a and x.
std::pair<BitCommitment, Opening> commit_bit_with(const Permutation& f, bool z,
                                                  const BitString& a,
                                                  const BitString& x);

// Accepted bit, or nullopt on reject (f(a) != b).
std::optional<bool> decommit_bit(const Permutation& f, const BitCommitment& com,
                                 const Opening& open);

// Number of openings a' in {0,1}^n that Bob would accept. n <= 12.
std::uint64_t audit_binding(const Permutation& f, const BitCommitment& com);

// X^{h(a1,x1)} Z^{h(a2,x2)} |psi>.
std::pair<QubitCommitment, QubitOpening> commit_qubit(const Permutation& f,
                                                      const StateVector& psi,
                                                      Rng& rng);
std::pair<QubitCommitment, QubitOpening> commit_qubit_with(
    const Permutation& f, const StateVector& psi, const BitString& a1,
    const BitString& a2, const BitString& x1, const BitString& x2);

// Z^{h(a2,x2)} X^{h(a1,x1)} |psi'> after checking both openings.
std::optional<StateVector> decommit_qubit(const Permutation& f,
                                          const QubitCommitment& com,
                                          const QubitOpening& open);

// Row-major 2x2 density matrix.
using DensityMatrix = std::array<Amplitude, 4>;

DensityMatrix density_of(const StateVector& qubit);
// (1/2) || rho - sigma ||_1 for 2x2 Hermitian matrices.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Pr[a.x = 1] for uniform a, x in {0,1}^n: (1 - 2^-n) / 2.
double inner_product_one_probability(int n);

struct HidingReport {
  int n = 0;
  std::uint64_t trials = 0;
  DensityMatrix exact{};
  DensityMatrix empirical{};
  double exact_distance = 0.0;      // from I/2
  double empirical_distance = 0.0;  // from I/2
  // Standard error of the empirical distance.
  double sigma = 0.0;
  // 2 * 2^-n.
  double bound = 0.0;
};

// Key-averaged masked state versus the totally mixed state. trials >= 1000.
HidingReport audit_qubit_hiding(const Permutation& f, const StateVector& psi,
                                std::uint64_t trials, Rng& rng);

// JSON transcript records; bit strings are hex, most significant first.
std::string commit_message_json(const BitCommitment& com);
std::string opening_json(const Opening& open);
std::string qubit_commit_message_json(const QubitCommitment& com);
std::string qubit_opening_json(const QubitOpening& open);
BitCommitment bit_commitment_from_json(int n, const std::string& text);
QubitCommitment qubit_commitment_from_json(int n, const std::string& text);

}  // namespace glq

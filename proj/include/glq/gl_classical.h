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
#include <span>
#include <vector>

#include "glq/bitstring.h"
#include "glq/gl_quantum.h"
#include "glq/oracles.h"
#include "glq/random.h"

namespace glq {

struct DecoderParams {
  int k = 1;                          // seed count
  std::uint64_t votes = 1;            // 2^k - 1
  std::uint64_t candidate_budget = 2; // at most 2^k
  double target_success = 0.5;

  void validate() const;
};

// k = ceil(log2(n / (2 (1 - target) eps^2) + 1)), so that Chebyshev plus a
// union bound over the n bits keeps the failure rate below 1 - target.
DecoderParams derive_params(int n, double epsilon, double target_success);

// List decoding from the vote table. votes[j * 2^k + J] holds the IP answer
// at r^J xor e_j (entry J = 0 is ignored). Candidate sigma has bit j equal to
// the majority over J != 0 of votes ^ parity(sigma & J), ties resolved to 0.
// Returns all 2^k candidates indexed by sigma.
std::vector<BitString> decode_candidates(int n, int k,
                                         std::span<const std::uint8_t> votes);

// Pairwise-independent Goldreich-Levin decoder with EQ-checked candidates.
SolveReport solve_classical(IpOracle& ip, EqOracle& eq,
                            const DecoderParams& params, Rng& rng);

}  // namespace glq

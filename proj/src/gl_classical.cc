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

#include <cmath>
#include <stdexcept>

namespace glq {

namespace {

constexpr int kMaxSeeds = 24;

// In-place Walsh-Hadamard transform: out[s] = sum_J in[J] (-1)^{s.J}.
void walsh_hadamard(std::vector<std::int64_t>& data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t i = 0; i < size; i += half << 1) {
      for (std::size_t j = i; j < i + half; ++j) {
        const std::int64_t u = data[j];
        const std::int64_t v = data[j + half];
        data[j] = u + v;
        data[j + half] = u - v;
      }
    }
  }
}

}  // namespace

void DecoderParams::validate() const {
  if (k < 1 || k > kMaxSeeds) {
    throw std::invalid_argument("decoder: k must lie in 1.." +
                                std::to_string(kMaxSeeds));
  }
  const std::uint64_t seeds = std::uint64_t{1} << k;
  if (votes != seeds - 1) {
    throw std::invalid_argument("decoder: votes must equal 2^k - 1");
  }
  if (candidate_budget < 1 || candidate_budget > seeds) {
    throw std::invalid_argument("decoder: candidate_budget must lie in 1..2^k");
  }
}

DecoderParams derive_params(int n, double epsilon, double target_success) {
  if (n < 1) throw std::invalid_argument("derive_params: n must be >= 1");
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw std::invalid_argument("derive_params: epsilon must lie in (0, 1/2]");
  }
  if (!(target_success > 0.0 && target_success < 1.0)) {
    throw std::invalid_argument(
        "derive_params: target success must lie in (0, 1)");
  }
  const double needed =
      n / (2.0 * (1.0 - target_success) * epsilon * epsilon);
  DecoderParams p;
  p.k = static_cast<int>(std::ceil(std::log2(needed + 1.0)));
  if (p.k < 1) p.k = 1;
  p.votes = (std::uint64_t{1} << p.k) - 1;
  p.candidate_budget = std::uint64_t{1} << p.k;
  p.target_success = target_success;
  p.validate();
  return p;
}

std::vector<BitString> decode_candidates(int n, int k,
                                         std::span<const std::uint8_t> votes) {
  const std::size_t seeds = std::size_t{1} << k;
  if (votes.size() != seeds * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("decode_candidates: vote table has wrong size");
  }
  std::vector<std::uint64_t> bits(seeds, 0);
  std::vector<std::int64_t> signs(seeds);
  for (int j = 0; j < n; ++j) {
    const auto row = votes.subspan(static_cast<std::size_t>(j) * seeds, seeds);
    signs[0] = 0;
    for (std::size_t J = 1; J < seeds; ++J) signs[J] = row[J] ? -1 : 1;
    walsh_hadamard(signs);
    // signs[s] = (#votes agreeing with 0) - (#votes agreeing with 1).
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
    for (std::size_t s = 0; s < seeds; ++s) {
      if (signs[s] < 0) bits[s] |= bit;
    }
  }
  std::vector<BitString> out;
  out.reserve(seeds);
  for (std::uint64_t b : bits) out.emplace_back(n, b);
  return out;
}

SolveReport solve_classical(IpOracle& ip, EqOracle& eq,
                            const DecoderParams& params, Rng& rng) {
  params.validate();
  const int n = ip.n();
  const int k = params.k;
  const std::size_t seeds = std::size_t{1} << k;
  const QueryTally ip_before = ip.tally();
  const QueryTally eq_before = eq.tally();

  std::vector<std::uint64_t> s(static_cast<std::size_t>(k));
  for (auto& v : s) v = rng() & low_mask(n);
  // r[J] = xor of s^i over the bits i of J.
  std::vector<std::uint64_t> r(seeds, 0);
  for (std::size_t J = 1; J < seeds; ++J) {
    const int low = std::countr_zero(J);
    r[J] = r[J & (J - 1)] ^ s[static_cast<std::size_t>(low)];
  }

  std::vector<std::uint8_t> votes(seeds * static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    const std::uint64_t e = std::uint64_t{1} << (n - 1 - j);
    for (std::size_t J = 1; J < seeds; ++J) {
      votes[static_cast<std::size_t>(j) * seeds + J] =
          ip.query(BitString(n, r[J] ^ e)) ? 1 : 0;
    }
  }

  const auto candidates = decode_candidates(n, k, votes);
  SolveReport report;
  for (std::uint64_t sigma = 0; sigma < params.candidate_budget; ++sigma) {
    report.rounds = sigma + 1;
    if (eq.query(candidates[sigma])) {
      report.found = candidates[sigma];
      break;
    }
  }
  report.gate_ops = 0;
  report.tally = (ip.tally() - ip_before) + (eq.tally() - eq_before);
  return report;
}

}  // namespace glq

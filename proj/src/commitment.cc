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

#include "glq/commitment.h"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace glq {

namespace {

BitString draw(int n, Rng& rng) { return BitString(n, rng() & low_mask(n)); }

void check_qubit(const StateVector& psi) {
  if (psi.num_qubits() != 1) {
    throw std::invalid_argument("qubit commitment: state must be one qubit");
  }
}

}  // namespace

std::pair<BitCommitment, Opening> commit_bit_with(const Permutation& f, bool z,
                                                  const BitString& a,
                                                  const BitString& x) {
  return {BitCommitment{f(a), x, z != dot(a, x)}, Opening{a}};
}

std::pair<BitCommitment, Opening> commit_bit(const Permutation& f, bool z,
                                             Rng& rng) {
  const BitString a = draw(f.n(), rng);
  const BitString x = draw(f.n(), rng);
  return commit_bit_with(f, z, a, x);
}

std::optional<bool> decommit_bit(const Permutation& f, const BitCommitment& com,
                                 const Opening& open) {
  if (open.a.size() != f.n() || com.b.size() != f.n() || com.x.size() != f.n()) {
    return std::nullopt;
  }
  if (f(open.a).value() != com.b.value()) return std::nullopt;
  return com.c != dot(open.a, com.x);
}

std::uint64_t audit_binding(const Permutation& f, const BitCommitment& com) {
  if (f.n() > 12) {
    throw std::invalid_argument("audit_binding: exhaustive audit needs n <= 12");
  }
  std::uint64_t accepted = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.n()); ++a) {
    if (decommit_bit(f, com, Opening{BitString(f.n(), a)})) ++accepted;
  }
  return accepted;
}

std::pair<QubitCommitment, QubitOpening> commit_qubit_with(
    const Permutation& f, const StateVector& psi, const BitString& a1,
    const BitString& a2, const BitString& x1, const BitString& x2) {
  check_qubit(psi);
  StateVector masked = psi;
  if (dot(a2, x2)) masked.apply(Gate::z(0));
  if (dot(a1, x1)) masked.apply(Gate::x(0));
  return {QubitCommitment{std::move(masked), f(a1), f(a2), x1, x2},
          QubitOpening{a1, a2}};
}

std::pair<QubitCommitment, QubitOpening> commit_qubit(const Permutation& f,
                                                      const StateVector& psi,
                                                      Rng& rng) {
  const int n = f.n();
  const BitString a1 = draw(n, rng);
  const BitString a2 = draw(n, rng);
  const BitString x1 = draw(n, rng);
  const BitString x2 = draw(n, rng);
  return commit_qubit_with(f, psi, a1, a2, x1, x2);
}

std::optional<StateVector> decommit_qubit(const Permutation& f,
                                          const QubitCommitment& com,
                                          const QubitOpening& open) {
  if (open.a1.size() != f.n() || open.a2.size() != f.n()) return std::nullopt;
  if (f(open.a1).value() != com.b1.value() ||
      f(open.a2).value() != com.b2.value()) {
    return std::nullopt;
  }
  StateVector out = com.masked_state;
  if (dot(open.a1, com.x1)) out.apply(Gate::x(0));
  if (dot(open.a2, com.x2)) out.apply(Gate::z(0));
  return out;
}

DensityMatrix density_of(const StateVector& qubit) {
  check_qubit(qubit);
  const Amplitude a0 = qubit.amplitude(0);
  const Amplitude a1 = qubit.amplitude(1);
  return {a0 * std::conj(a0), a0 * std::conj(a1), a1 * std::conj(a0),
          a1 * std::conj(a1)};
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  // Difference is Hermitian; eigenvalues are (t/2) +- sqrt((d/2)^2 + |o|^2)
  // with t the trace, d the diagonal gap and o the off-diagonal entry.
  const double p = (rho[0] - sigma[0]).real();
  const double q = (rho[3] - sigma[3]).real();
  const Amplitude o = rho[1] - sigma[1];
  const double mid = 0.5 * (p + q);
  const double radius = std::sqrt(0.25 * (p - q) * (p - q) + std::norm(o));
  return 0.5 * (std::abs(mid + radius) + std::abs(mid - radius));
}

double inner_product_one_probability(int n) {
  return 0.5 * (1.0 - std::ldexp(1.0, -n));
}

HidingReport audit_qubit_hiding(const Permutation& f, const StateVector& psi,
                                std::uint64_t trials, Rng& rng) {
  check_qubit(psi);
  if (trials < 1000) {
    throw std::invalid_argument("audit_qubit_hiding: need at least 1000 trials");
  }
  const int n = f.n();
  HidingReport report;
  report.n = n;
  report.trials = trials;
  report.bound = 2.0 * std::ldexp(1.0, -n);
  const DensityMatrix mixed{0.5, 0.0, 0.0, 0.5};

  // Exact average over the four mask outcomes.
  const double p = inner_product_one_probability(n);
  for (int h1 = 0; h1 < 2; ++h1) {
    for (int h2 = 0; h2 < 2; ++h2) {
      const double w = (h1 ? p : 1 - p) * (h2 ? p : 1 - p);
      StateVector masked = psi;
      if (h2) masked.apply(Gate::z(0));
      if (h1) masked.apply(Gate::x(0));
      const DensityMatrix rho = density_of(masked);
      for (int i = 0; i < 4; ++i) report.exact[i] += w * rho[i];
    }
  }
  report.exact_distance = trace_distance(report.exact, mixed);

  // Monte Carlo over random keys. Track Bloch components for the error bar.
  double sum[3] = {0, 0, 0};
  double sum_sq[3] = {0, 0, 0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto [com, open] = commit_qubit(f, psi, rng);
    const DensityMatrix rho = density_of(com.masked_state);
    const double bloch[3] = {2.0 * rho[1].real(), -2.0 * rho[1].imag(),
                             (rho[0] - rho[3]).real()};
    for (int i = 0; i < 3; ++i) {
      sum[i] += bloch[i];
      sum_sq[i] += bloch[i] * bloch[i];
    }
    for (int i = 0; i < 4; ++i) report.empirical[i] += rho[i];
  }
  const double count = static_cast<double>(trials);
  for (auto& v : report.empirical) v /= count;
  report.empirical_distance = trace_distance(report.empirical, mixed);
  double variance = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double mean = sum[i] / count;
    variance += std::max(0.0, sum_sq[i] / count - mean * mean);
  }
  // Distance is half the Bloch-vector length.
  report.sigma = 0.5 * std::sqrt(variance / count);
  return report;
}

// ---------------------------------------------------------------------------
// Transcripts

std::string commit_message_json(const BitCommitment& com) {
  nlohmann::ordered_json j;
  j["phase"] = "commit";
  j["n"] = com.b.size();
  j["b"] = com.b.hex();
  j["x"] = com.x.hex();
  j["c"] = com.c ? 1 : 0;
  return j.dump();
}

std::string opening_json(const Opening& open) {
  nlohmann::ordered_json j;
  j["phase"] = "decommit";
  j["a"] = open.a.hex();
  return j.dump();
}

std::string qubit_commit_message_json(const QubitCommitment& com) {
  nlohmann::ordered_json j;
  j["phase"] = "commit";
  j["n"] = com.b1.size();
  j["b1"] = com.b1.hex();
  j["b2"] = com.b2.hex();
  j["x1"] = com.x1.hex();
  j["x2"] = com.x2.hex();
  auto amps = nlohmann::ordered_json::array();
  for (const Amplitude& a : com.masked_state.amplitudes()) {
    amps.push_back({a.real(), a.imag()});
  }
  j["amplitudes"] = amps;
  return j.dump();
}

std::string qubit_opening_json(const QubitOpening& open) {
  nlohmann::ordered_json j;
  j["phase"] = "decommit";
  j["a1"] = open.a1.hex();
  j["a2"] = open.a2.hex();
  return j.dump();
}

BitCommitment bit_commitment_from_json(int n, const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return BitCommitment{BitString::from_hex(n, j.at("b").get<std::string>()),
                       BitString::from_hex(n, j.at("x").get<std::string>()),
                       j.at("c").get<int>() != 0};
}

QubitCommitment qubit_commitment_from_json(int n, const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<Amplitude> amps;
  for (const auto& pair : j.at("amplitudes")) {
    amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return QubitCommitment{
      StateVector::from_amplitudes(std::move(amps)),
      BitString::from_hex(n, j.at("b1").get<std::string>()),
      BitString::from_hex(n, j.at("b2").get<std::string>()),
      BitString::from_hex(n, j.at("x1").get<std::string>()),
      BitString::from_hex(n, j.at("x2").get<std::string>())};
}

}  // namespace glq

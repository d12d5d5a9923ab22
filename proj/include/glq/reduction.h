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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glq/bitstring.h"
#include "glq/gl_classical.h"
#include "glq/gl_quantum.h"
#include "glq/oracles.h"
#include "glq/random.h"

namespace glq {

enum class PermutationKind { kTable, kOddMultiplier, kFeistel, kCustom };

std::string to_string(PermutationKind kind);
PermutationKind permutation_kind_from_string(const std::string& name);

// Describes how a permutation was built. The hardness fields are recorded
// for experiment metadata only; nothing enforces them.
struct PermutationDescriptor {
  PermutationKind kind = PermutationKind::kTable;
  int n = 8;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> multiplier;
  int rounds = 4;
  std::optional<double> hardness_delta;
  std::optional<double> hardness_size;
};

// Toy bijection on {0,1}^n standing in for a one-way permutation. Immutable
// and cheap to copy.
class Permutation {
 public:
  static constexpr int kMaxTableBits = 16;
  static constexpr int kMaxBits = 62;

  static Permutation make(const PermutationDescriptor& descriptor);
  static Permutation make(PermutationKind kind, int n, std::uint64_t seed);
  static Permutation odd_multiplier(int n, std::uint64_t multiplier);
  static Permutation identity(int n) { return odd_multiplier(n, 1); }
  // Arbitrary rule, not checked for bijectivity. Test fixtures only.
  static Permutation unchecked(int n, std::function<std::uint64_t(std::uint64_t)> rule);

  int n() const { return descriptor_.n; }
  const PermutationDescriptor& descriptor() const { return descriptor_; }

  std::uint64_t apply(std::uint64_t x) const;
  BitString operator()(const BitString& x) const;
  // Not available for kCustom.
  std::uint64_t invert(std::uint64_t y) const;

  // Exhaustive check over all 2^n inputs (n <= 24).
  bool is_bijective() const;

 private:
  struct Impl;
  explicit Permutation(std::shared_ptr<const Impl> impl,
                       PermutationDescriptor descriptor);

  std::shared_ptr<const Impl> impl_;
  PermutationDescriptor descriptor_;
};

std::pair<BitString, BitString> f_tilde(const Permutation& f,
                                        const BitString& y,
                                        const BitString& x);

// Black box G(b, x) -> bit attempting to predict h(y, x) = y.x from
// f~(y, x) = (f(y), x). Table-backed predictors support unitary queries.
class Predictor {
 public:
  static constexpr int kMaxTableBits = 12;

  // table[b * 2^n + x].
  static Predictor from_table(int n, std::vector<std::uint8_t> table);
  static Predictor from_function(
      int n, std::function<bool(const BitString& b, const BitString& x)> rule);

  int n() const { return n_; }
  bool is_table() const { return table_ != nullptr; }

  bool operator()(const BitString& b, const BitString& x) const;
  // Row G(b, .) of a table predictor.
  std::span<const std::uint8_t> row(std::uint64_t b) const;

 private:
  Predictor() = default;

  int n_ = 0;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
  std::function<bool(const BitString&, const BitString&)> rule_;
};

// Chooses ceil(delta 2^n) good keys y. For a good y, G(f(y), .) agrees with
// h(y, .) on exactly (1/2 + epsilon) 2^n inputs; other rows are random bits.
Predictor make_synthetic_predictor(const Permutation& f, double delta,
                                   double epsilon, Rng& rng);

struct PredictorDescriptor {
  int n = 8;
  std::uint64_t seed = 0;
  double delta = 1.0;
  double epsilon = 0.25;
};

Predictor make_synthetic_predictor(const Permutation& f,
                                   const PredictorDescriptor& descriptor);

// G(b, x) = h(f^{-1}(b), x): the predictor that breaks the bit commitment.
Predictor make_perfect_predictor(const Permutation& f);

struct PredictionProfile {
  int n = 0;
  // Pr_{y,x}[G(f~(y,x)) = h(y,x)].
  double mean_agreement = 0.0;
  // agreement_counts[y] = #{x : G(f(y), x) = y.x}.
  std::vector<std::uint32_t> agreement_counts;
  // (delta, epsilon) pairs: for each distinct per-y bias epsilon >= 0, the
  // fraction delta of y at least that good. Sorted by decreasing epsilon.
  std::vector<std::pair<double, double>> frontier;

  double agreement(std::uint64_t y) const;
  // Fraction of y with per-y agreement >= 1/2 + epsilon.
  double good_fraction(double epsilon) const;
  bool predicts(double delta, double epsilon) const;
};

PredictionProfile profile_predictor(const Predictor& g, const Permutation& f);

// Whether the profile certifies (eps/(1-eps), eps/2)-prediction.
bool check_lemma1(const PredictionProfile& profile, double epsilon);

// x -> G(b, x). Table predictors give a unitary-capable XOR oracle.
IpOracle predictor_ip_oracle(const Predictor& g, const BitString& b);

// x -> [f(x) = b], one f evaluation per query.
EqOracle permutation_eq_oracle(const Permutation& f, const BitString& b);

enum class InversionMode { kQuantum, kClassical };

struct InverterOptions {
  InversionMode mode = InversionMode::kQuantum;
  QSearchParams qsearch;
  // Classical decoder sizing: assumed predictor advantage and target success.
  double epsilon = 0.25;
  double target_success = 0.5;
};

inline constexpr int kMaxQuantumInversionBits = 14;

// Recovers a with f(a) = b from f-queries and G-queries alone.
SolveReport invert_with_predictor(const Permutation& f, const Predictor& g,
                                  const BitString& b,
                                  const InverterOptions& options, Rng& rng);

std::string permutation_descriptor_to_json(const PermutationDescriptor& d);
PermutationDescriptor permutation_descriptor_from_json(const std::string& text);
std::string predictor_descriptor_to_json(const PredictorDescriptor& d);
PredictorDescriptor predictor_descriptor_from_json(const std::string& text);

}  // namespace glq

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
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "glq/bitstring.h"
#include "glq/random.h"
#include "glq/statevector.h"

namespace glq {

struct QueryTally {
  std::uint64_t ip_forward = 0;
  std::uint64_t ip_inverse = 0;
  std::uint64_t eq = 0;
  std::uint64_t f_calls = 0;

  std::uint64_t ip_total() const { return ip_forward + ip_inverse; }
  // IP forward + IP inverse + EQ.
  std::uint64_t total_queries() const { return ip_total() + eq; }

  QueryTally& operator+=(const QueryTally& o) {
    ip_forward += o.ip_forward;
    ip_inverse += o.ip_inverse;
    eq += o.eq;
    f_calls += o.f_calls;
    return *this;
  }
  friend QueryTally operator+(QueryTally a, const QueryTally& b) { return a += b; }
  friend QueryTally operator-(QueryTally a, const QueryTally& b) {
    a.ip_forward -= b.ip_forward;
    a.ip_inverse -= b.ip_inverse;
    a.eq -= b.eq;
    a.f_calls -= b.f_calls;
    return a;
  }
  bool operator==(const QueryTally&) const = default;
};

class UnsupportedModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ExhaustionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IpFamily { kBiasedSet, kRotation, kLazy, kTable, kFunction };
enum class Direction { kForward, kInverse };

std::string to_string(IpFamily family);
IpFamily ip_family_from_string(const std::string& name);

// epsilon * 2^n, throwing unless it is an integer and 0 < epsilon <= 1/2.
std::uint64_t epsilon_numerator(double epsilon, int n);
bool is_dyadic_for(double epsilon, int n);

// Maps a basis index x (0 <= x < 2^n) to a rotation angle in [0, pi/2].
using AngleRule = std::function<double(std::uint64_t x, Rng& rng)>;

AngleRule constant_angle(double theta);
// Constant angle with cos^2(theta) = 1/2 + epsilon.
AngleRule bias_angle(double epsilon);

struct OracleTerm {
  BitString label;
  double amplitude;
};

// Noisy inner-product black box over n-bit inputs with a one-qubit target
// (m = 1). Deterministic families act as |x,b> -> |x, b ^ d(x)>; the
// rotation family applies R(theta_x) to the target and then XORs a.x.
class IpOracle {
 public:
  static IpOracle biased_set(int n, double epsilon, const BitString& secret,
                             Rng& rng);
  static IpOracle rotation(int n, double epsilon, const BitString& secret,
                           const AngleRule& rule, Rng& rng);
  static IpOracle lazy_biased(int n, double epsilon, const BitString& secret,
                              Rng& rng);
  // Arbitrary deterministic answer table, answers[x] for x in [0, 2^n).
  static IpOracle from_table(int n, std::vector<std::uint8_t> answers);
  // Classical-only black box backed by a callback.
  static IpOracle from_function(int n,
                                std::function<bool(const BitString&)> answer);

  int n() const { return n_; }
  int ancilla_qubits() const { return 1; }
  IpFamily family() const { return family_; }
  double epsilon() const { return epsilon_; }
  const std::optional<BitString>& secret() const { return secret_; }
  bool supports_unitary() const;

  // Classical query; counts one forward IP query.
  bool query(const BitString& x);

  // Output superposition of U_IP on an (n+1)-bit basis label. Not tallied.
  std::vector<OracleTerm> unitary_action(const BitString& label) const;

  // U_IP or its inverse on qubits [first_qubit, first_qubit + n + 1).
  void apply(StateVector& state, Direction direction, int first_qubit = 0);

  // Deterministic part d(x) of the answer (x index < 2^n).
  bool deterministic_answer(std::uint64_t x) const;
  // Rotation angle theta_x; zero for deterministic families.
  double angle(std::uint64_t x) const;
  // BiasedSet membership of x in the agreement set S.
  bool in_agreement_set(std::uint64_t x) const;

  // Lazy family bookkeeping.
  std::uint64_t lazy_queried() const { return lazy_queried_; }
  std::uint64_t lazy_placed_in_set() const { return lazy_placed_; }

  const QueryTally& tally() const { return tally_; }
  void reset_tally() { tally_ = {}; }

 private:
  IpOracle(int n, IpFamily family, double epsilon);
  void require_unitary() const;
  void check_input(const BitString& x) const;
  bool lazy_member(std::uint64_t x);

  int n_;
  IpFamily family_;
  double epsilon_;
  std::optional<BitString> secret_;
  // d(x) for table-backed families.
  std::vector<std::uint8_t> answers_;
  std::vector<double> angles_;
  std::function<bool(const BitString&)> callback_;
  std::unordered_map<std::uint64_t, bool> lazy_memo_;
  std::uint64_t lazy_queried_ = 0;
  std::uint64_t lazy_placed_ = 0;
  Rng rng_;
  QueryTally tally_;
};

// Equality test against a hidden string, either a planted secret or any
// predicate with exactly the marked inputs (e.g. f(x) = b).
class EqOracle {
 public:
  static EqOracle for_secret(const BitString& secret);
  // When counts_f_calls is set each query also counts one evaluation of f.
  static EqOracle from_predicate(int n,
                                 std::function<bool(const BitString&)> marked,
                                 bool counts_f_calls);

  int n() const { return n_; }

  // Counts one EQ query.
  bool query(const BitString& x);

  // Quantum EQ query as a phase flip on every basis state whose leading n
  // qubits are marked. Counts one EQ query.
  void apply_phase(StateVector& state);

  const QueryTally& tally() const { return tally_; }
  void reset_tally() { tally_ = {}; }

 private:
  EqOracle(int n, std::function<bool(const BitString&)> marked,
           bool counts_f_calls);
  void count();
  const std::vector<std::uint64_t>& marked_inputs();

  int n_;
  std::function<bool(const BitString&)> marked_;
  std::optional<BitString> secret_;
  bool counts_f_calls_;
  std::optional<std::vector<std::uint64_t>> marked_cache_;
  QueryTally tally_;
};

bool ip_query(IpOracle& oracle, const BitString& x);
bool eq_query(EqOracle& oracle, const BitString& x);

StateVector apply_ip_oracle(StateVector state, IpOracle& oracle,
                            Direction direction);

// Serializable recipe for an IP oracle; the secret is drawn from the seed
// when absent.
struct OracleSpec {
  IpFamily family = IpFamily::kBiasedSet;
  int n = 8;
  double epsilon = 0.125;
  std::uint64_t seed = 0;
  std::optional<BitString> secret;
};

struct PlantedInstance {
  BitString secret;
  IpOracle ip;
  EqOracle eq;
};

PlantedInstance make_instance(const OracleSpec& spec);

std::string oracle_spec_to_json(const OracleSpec& spec);
OracleSpec oracle_spec_from_json(const std::string& text);

}  // namespace glq

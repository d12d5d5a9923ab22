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

#include "glq/oracles.h"

#include <cmath>
#include <numbers>
#include <numeric>

#include "json.hpp"

namespace glq {

namespace {

constexpr int kMaxTableBits = 24;
constexpr int kMaxLazyBits = 62;

void check_table_size(int n) {
  if (n < 1 || n > kMaxTableBits) {
    throw std::invalid_argument("table-backed oracle needs 1 <= n <= " +
                                std::to_string(kMaxTableBits) + ", got " +
                                std::to_string(n));
  }
}

BitString draw_string(int n, Rng& rng) {
  return BitString(n, rng() & low_mask(n));
}

}  // namespace

std::string to_string(IpFamily family) {
  switch (family) {
    case IpFamily::kBiasedSet:
      return "biased_set";
    case IpFamily::kRotation:
      return "rotation";
    case IpFamily::kLazy:
      return "lazy";
    case IpFamily::kTable:
      return "table";
    case IpFamily::kFunction:
      return "function";
  }
  return "unknown";
}

IpFamily ip_family_from_string(const std::string& name) {
  if (name == "biased_set") return IpFamily::kBiasedSet;
  if (name == "rotation") return IpFamily::kRotation;
  if (name == "lazy") return IpFamily::kLazy;
  if (name == "table") return IpFamily::kTable;
  if (name == "function") return IpFamily::kFunction;
  throw std::invalid_argument("unknown oracle family: " + name);
}

bool is_dyadic_for(double epsilon, int n) {
  if (!(epsilon > 0.0 && epsilon <= 0.5) || n < 1 || n > kMaxLazyBits) {
    return false;
  }
  const double scaled = std::ldexp(epsilon, n);
  return scaled == std::floor(scaled);
}

std::uint64_t epsilon_numerator(double epsilon, int n) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2], got " +
                                std::to_string(epsilon));
  }
  if (!is_dyadic_for(epsilon, n)) {
    throw std::invalid_argument("epsilon * 2^n must be an integer (epsilon=" +
                                std::to_string(epsilon) +
                                ", n=" + std::to_string(n) + ")");
  }
  return static_cast<std::uint64_t>(std::ldexp(epsilon, n));
}

AngleRule constant_angle(double theta) {
  return [theta](std::uint64_t, Rng&) { return theta; };
}

AngleRule bias_angle(double epsilon) {
  return constant_angle(std::acos(std::sqrt(0.5 + epsilon)));
}

// ---------------------------------------------------------------------------
// IpOracle

IpOracle::IpOracle(int n, IpFamily family, double epsilon)
    : n_(n), family_(family), epsilon_(epsilon) {}

IpOracle IpOracle::biased_set(int n, double epsilon, const BitString& secret,
                              Rng& rng) {
  check_table_size(n);
  if (secret.size() != n) {
    throw std::invalid_argument("biased_set: secret length != n");
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t members = size / 2 + epsilon_numerator(epsilon, n);

  IpOracle o(n, IpFamily::kBiasedSet, epsilon);
  o.secret_ = secret;
  o.rng_.seed(rng());

  // Partial Fisher-Yates: the first `members` slots form S.
  std::vector<std::uint32_t> order(size);
  std::iota(order.begin(), order.end(), 0u);
  for (std::uint64_t i = 0; i < members && i + 1 < size; ++i) {
    const std::uint64_t j = i + uniform_below(o.rng_, size - i);
    std::swap(order[i], order[j]);
  }
  o.answers_.assign(size, 0);
  std::vector<std::uint8_t> in_set(size, 0);
  for (std::uint64_t i = 0; i < members; ++i) in_set[order[i]] = 1;
  for (std::uint64_t x = 0; x < size; ++x) {
    const bool ax = parity(secret.value() & x);
    o.answers_[x] = static_cast<std::uint8_t>(in_set[x] ? ax : !ax);
  }
  return o;
}

IpOracle IpOracle::rotation(int n, double epsilon, const BitString& secret,
                            const AngleRule& rule, Rng& rng) {
  check_table_size(n);
  if (secret.size() != n) {
    throw std::invalid_argument("rotation: secret length != n");
  }
  if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
    throw std::invalid_argument("rotation: epsilon must lie in [0, 1/2]");
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  IpOracle o(n, IpFamily::kRotation, epsilon);
  o.secret_ = secret;
  o.rng_.seed(rng());
  o.answers_.resize(size);
  o.angles_.resize(size);
  double mean_cos2 = 0.0;
  for (std::uint64_t x = 0; x < size; ++x) {
    const double theta = rule(x, rng);
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-12)) {
      throw std::invalid_argument("rotation: angle outside [0, pi/2]");
    }
    o.angles_[x] = theta;
    o.answers_[x] = static_cast<std::uint8_t>(parity(secret.value() & x));
    const double c = std::cos(theta);
    mean_cos2 += c * c;
  }
  mean_cos2 /= static_cast<double>(size);
  if (mean_cos2 < 0.5 + epsilon - 1e-9) {
    throw std::invalid_argument(
        "rotation: mean agreement " + std::to_string(mean_cos2) +
        " is below 1/2 + epsilon = " + std::to_string(0.5 + epsilon));
  }
  return o;
}

IpOracle IpOracle::lazy_biased(int n, double epsilon, const BitString& secret,
                               Rng& rng) {
  if (n < 1 || n > kMaxLazyBits) {
    throw std::invalid_argument("lazy_biased: n must lie in 1..62");
  }
  if (secret.size() != n) {
    throw std::invalid_argument("lazy_biased: secret length != n");
  }
  epsilon_numerator(epsilon, n);
  IpOracle o(n, IpFamily::kLazy, epsilon);
  o.secret_ = secret;
  o.rng_.seed(rng());
  return o;
}

IpOracle IpOracle::from_table(int n, std::vector<std::uint8_t> answers) {
  check_table_size(n);
  if (answers.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("from_table: need 2^n answers");
  }
  IpOracle o(n, IpFamily::kTable, 0.0);
  for (auto& a : answers) a = a ? 1 : 0;
  o.answers_ = std::move(answers);
  return o;
}

IpOracle IpOracle::from_function(int n,
                                 std::function<bool(const BitString&)> answer) {
  if (n < 1 || n > BitString::kMaxLength) {
    throw std::invalid_argument("from_function: bad n");
  }
  IpOracle o(n, IpFamily::kFunction, 0.0);
  o.callback_ = std::move(answer);
  return o;
}

bool IpOracle::supports_unitary() const {
  return family_ == IpFamily::kBiasedSet || family_ == IpFamily::kRotation ||
         family_ == IpFamily::kTable;
}

void IpOracle::require_unitary() const {
  if (!supports_unitary()) {
    throw UnsupportedModeError("oracle family '" + to_string(family_) +
                               "' has no unitary mode");
  }
}

void IpOracle::check_input(const BitString& x) const {
  if (x.size() != n_) {
    throw std::invalid_argument("IP query: input length " +
                                std::to_string(x.size()) + " != n = " +
                                std::to_string(n_));
  }
}

bool IpOracle::lazy_member(std::uint64_t x) {
  if (auto it = lazy_memo_.find(x); it != lazy_memo_.end()) return it->second;
  const std::uint64_t size = std::uint64_t{1} << n_;
  const std::uint64_t remaining = size - lazy_queried_;
  if (remaining == 0) {
    throw ExhaustionError("lazy oracle: every input has already been placed");
  }
  const std::uint64_t set_size = size / 2 + epsilon_numerator(epsilon_, n_);
  const std::uint64_t set_left = set_size - lazy_placed_;
  // Placed in S with probability (|S| - j) / (2^n - (i - 1)).
  const bool member = uniform_below(rng_, remaining) < set_left;
  lazy_memo_.emplace(x, member);
  ++lazy_queried_;
  if (member) ++lazy_placed_;
  return member;
}

bool IpOracle::query(const BitString& x) {
  check_input(x);
  ++tally_.ip_forward;
  const std::uint64_t v = x.value();
  switch (family_) {
    case IpFamily::kBiasedSet:
    case IpFamily::kTable:
      return answers_[v] != 0;
    case IpFamily::kRotation: {
      const double c = std::cos(angles_[v]);
      const bool correct = bernoulli(rng_, c * c);
      return correct ? answers_[v] != 0 : answers_[v] == 0;
    }
    case IpFamily::kLazy: {
      const bool ax = parity(secret_->value() & v);
      return lazy_member(v) ? ax : !ax;
    }
    case IpFamily::kFunction:
      return callback_(x);
  }
  return false;
}

bool IpOracle::deterministic_answer(std::uint64_t x) const {
  require_unitary();
  return answers_.at(x) != 0;
}

double IpOracle::angle(std::uint64_t x) const {
  require_unitary();
  return family_ == IpFamily::kRotation ? angles_.at(x) : 0.0;
}

bool IpOracle::in_agreement_set(std::uint64_t x) const {
  if (family_ != IpFamily::kBiasedSet) {
    throw UnsupportedModeError("in_agreement_set: not a biased-set oracle");
  }
  return (answers_.at(x) != 0) == parity(secret_->value() & x);
}

std::vector<OracleTerm> IpOracle::unitary_action(const BitString& label) const {
  require_unitary();
  if (label.size() != n_ + 1) {
    throw std::invalid_argument("unitary_action: label must have n+1 bits");
  }
  const std::uint64_t x = label.value() >> 1;
  const bool b = (label.value() & 1) != 0;
  const bool d = answers_[x] != 0;
  const double theta = angle(x);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // R|0> = c|0> + s|1>, R|1> = -s|0> + c|1>, then XOR d.
  const double amp_d = b ? -s : c;
  const double amp_not_d = b ? c : s;
  std::vector<OracleTerm> out;
  const std::uint64_t base = x << 1;
  if (amp_d != 0.0) {
    out.push_back({BitString(n_ + 1, base | static_cast<std::uint64_t>(d)), amp_d});
  }
  if (amp_not_d != 0.0) {
    out.push_back(
        {BitString(n_ + 1, base | static_cast<std::uint64_t>(!d)), amp_not_d});
  }
  return out;
}

void IpOracle::apply(StateVector& state, Direction direction, int first_qubit) {
  require_unitary();
  const int q = state.num_qubits();
  if (first_qubit < 0 || first_qubit + n_ + 1 > q) {
    throw std::invalid_argument("apply_ip_oracle: state has " +
                                std::to_string(q) + " qubits, oracle needs " +
                                std::to_string(n_ + 1) + " starting at " +
                                std::to_string(first_qubit));
  }
  const int target_shift = state.shift_of(first_qubit + n_);
  const int x_shift = target_shift + 1;
  const std::size_t target_bit = std::size_t{1} << target_shift;
  const std::uint64_t x_mask = low_mask(n_);
  const bool rotating = family_ == IpFamily::kRotation;
  auto amps = state.mutable_amplitudes();

  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & target_bit) continue;
    const std::size_t j = i | target_bit;
    const std::uint64_t x = (i >> x_shift) & x_mask;
    const bool d = answers_[x] != 0;
    Amplitude a0 = amps[i];
    Amplitude a1 = amps[j];
    if (!rotating) {
      if (d) std::swap(amps[i], amps[j]);
      continue;
    }
    const double c = std::cos(angles_[x]);
    const double s = std::sin(angles_[x]);
    if (direction == Direction::kForward) {
      // X^d R(theta).
      Amplitude r0 = c * a0 - s * a1;
      Amplitude r1 = s * a0 + c * a1;
      if (d) std::swap(r0, r1);
      amps[i] = r0;
      amps[j] = r1;
    } else {
      // R(theta)^T X^d.
      if (d) std::swap(a0, a1);
      amps[i] = c * a0 + s * a1;
      amps[j] = -s * a0 + c * a1;
    }
  }
  if (direction == Direction::kForward) {
    ++tally_.ip_forward;
  } else {
    ++tally_.ip_inverse;
  }
  state.count_ops(1);
}

// ---------------------------------------------------------------------------
// EqOracle

EqOracle::EqOracle(int n, std::function<bool(const BitString&)> marked,
                   bool counts_f_calls)
    : n_(n), marked_(std::move(marked)), counts_f_calls_(counts_f_calls) {}

EqOracle EqOracle::for_secret(const BitString& secret) {
  EqOracle o(secret.size(), nullptr, false);
  o.secret_ = secret;
  return o;
}

EqOracle EqOracle::from_predicate(int n,
                                  std::function<bool(const BitString&)> marked,
                                  bool counts_f_calls) {
  if (n < 1 || n > BitString::kMaxLength) {
    throw std::invalid_argument("EqOracle: bad n");
  }
  return EqOracle(n, std::move(marked), counts_f_calls);
}

void EqOracle::count() {
  ++tally_.eq;
  if (counts_f_calls_) ++tally_.f_calls;
}

bool EqOracle::query(const BitString& x) {
  if (x.size() != n_) {
    throw std::invalid_argument("EQ query: input length " +
                                std::to_string(x.size()) + " != n = " +
                                std::to_string(n_));
  }
  count();
  return secret_ ? x.value() == secret_->value() : marked_(x);
}

const std::vector<std::uint64_t>& EqOracle::marked_inputs() {
  if (!marked_cache_) {
    if (n_ > kMaxQubits) {
      throw ResourceLimitError("EqOracle: superposed query over too many bits");
    }
    std::vector<std::uint64_t> marked;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n_); ++x) {
      if (marked_(BitString(n_, x))) marked.push_back(x);
    }
    marked_cache_ = std::move(marked);
  }
  return *marked_cache_;
}

void EqOracle::apply_phase(StateVector& state) {
  if (state.num_qubits() < n_) {
    throw std::invalid_argument("EqOracle: state smaller than query register");
  }
  if (secret_) {
    state.apply(Gate::phase_flip_prefix(*secret_));
  } else {
    for (std::uint64_t x : marked_inputs()) {
      state.apply(Gate::phase_flip_prefix(BitString(n_, x)));
    }
  }
  count();
}

bool ip_query(IpOracle& oracle, const BitString& x) { return oracle.query(x); }

bool eq_query(EqOracle& oracle, const BitString& x) { return oracle.query(x); }

StateVector apply_ip_oracle(StateVector state, IpOracle& oracle,
                            Direction direction) {
  oracle.apply(state, direction);
  return state;
}

// ---------------------------------------------------------------------------
// Specs

PlantedInstance make_instance(const OracleSpec& spec) {
  Rng rng(spec.seed);
  const BitString secret =
      spec.secret ? *spec.secret : draw_string(spec.n, rng);
  if (secret.size() != spec.n) {
    throw std::invalid_argument("oracle spec: secret length != n");
  }
  auto ip = [&] {
    switch (spec.family) {
      case IpFamily::kBiasedSet:
        return IpOracle::biased_set(spec.n, spec.epsilon, secret, rng);
      case IpFamily::kRotation:
        return IpOracle::rotation(spec.n, spec.epsilon, secret,
                                  bias_angle(spec.epsilon), rng);
      case IpFamily::kLazy:
        return IpOracle::lazy_biased(spec.n, spec.epsilon, secret, rng);
      default:
        throw std::invalid_argument("oracle spec: family '" +
                                    to_string(spec.family) +
                                    "' cannot be built from a spec");
    }
  }();
  return {secret, std::move(ip), EqOracle::for_secret(secret)};
}

std::string oracle_spec_to_json(const OracleSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = to_string(spec.family);
  j["n"] = spec.n;
  j["epsilon"] = spec.epsilon;
  j["seed"] = spec.seed;
  if (spec.secret) j["secret"] = spec.secret->hex();
  return j.dump();
}

OracleSpec oracle_spec_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  OracleSpec spec;
  spec.family = ip_family_from_string(j.at("family").get<std::string>());
  spec.n = j.at("n").get<int>();
  spec.epsilon = j.at("epsilon").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("secret")) {
    spec.secret = BitString::from_hex(spec.n, j.at("secret").get<std::string>());
  }
  return spec;
}

}  // namespace glq

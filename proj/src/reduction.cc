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

#include "glq/reduction.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <variant>

#include "json.hpp"

namespace glq {

namespace {

std::uint64_t feistel_round_function(std::uint64_t half, std::uint64_t key) {
  return splitmix64(half ^ key);
}

std::uint64_t inverse_mod_pow2(std::uint64_t odd) {
  std::uint64_t inv = odd;  // correct to 3 bits
  for (int i = 0; i < 5; ++i) inv *= 2 - odd * inv;
  return inv;
}

void check_bits(int n, int limit, const char* what) {
  if (n < 1 || n > limit) {
    throw std::invalid_argument(std::string(what) + ": n must lie in 1.." +
                                std::to_string(limit) + ", got " +
                                std::to_string(n));
  }
}

bool is_integral(double v) { return v == std::floor(v); }

}  // namespace

std::string to_string(PermutationKind kind) {
  switch (kind) {
    case PermutationKind::kTable:
      return "table";
    case PermutationKind::kOddMultiplier:
      return "odd_multiplier";
    case PermutationKind::kFeistel:
      return "feistel_rounds";
    case PermutationKind::kCustom:
      return "custom";
  }
  return "unknown";
}

PermutationKind permutation_kind_from_string(const std::string& name) {
  if (name == "table") return PermutationKind::kTable;
  if (name == "odd_multiplier") return PermutationKind::kOddMultiplier;
  if (name == "feistel_rounds") return PermutationKind::kFeistel;
  throw std::invalid_argument("unknown permutation kind: " + name);
}

// ---------------------------------------------------------------------------
// Permutation

struct Permutation::Impl {
  struct Table {
    std::vector<std::uint32_t> forward;
    std::vector<std::uint32_t> inverse;
  };
  struct Multiplier {
    std::uint64_t factor;
    std::uint64_t inverse;
  };
  struct Feistel {
    std::vector<std::uint64_t> keys;
  };
  struct Custom {
    std::function<std::uint64_t(std::uint64_t)> rule;
  };

  int n;
  std::variant<Table, Multiplier, Feistel, Custom> rule;

  std::uint64_t forward(std::uint64_t x) const {
    const std::uint64_t mask = low_mask(n);
    if (const auto* t = std::get_if<Table>(&rule)) return t->forward[x];
    if (const auto* m = std::get_if<Multiplier>(&rule)) {
      return (x * m->factor) & mask;
    }
    if (const auto* f = std::get_if<Feistel>(&rule)) {
      // Unbalanced rounds: (L | R) with |R| = low -> (R | L ^ F(R)).
      int high = n - n / 2;
      int low = n / 2;
      std::uint64_t v = x;
      for (std::uint64_t key : f->keys) {
        const std::uint64_t l = v >> low;
        const std::uint64_t r = v & low_mask(low);
        const std::uint64_t mixed =
            (l ^ feistel_round_function(r, key)) & low_mask(high);
        v = (r << high) | mixed;
        std::swap(high, low);
      }
      return v;
    }
    return std::get<Custom>(rule).rule(x) & mask;
  }

  std::uint64_t backward(std::uint64_t y) const {
    if (const auto* t = std::get_if<Table>(&rule)) return t->inverse[y];
    if (const auto* m = std::get_if<Multiplier>(&rule)) {
      return (y * m->inverse) & low_mask(n);
    }
    if (const auto* f = std::get_if<Feistel>(&rule)) {
      // Replay the split sizes, then undo the rounds in reverse.
      std::vector<std::pair<int, int>> splits;
      int high = n - n / 2;
      int low = n / 2;
      for (std::size_t i = 0; i < f->keys.size(); ++i) {
        splits.emplace_back(high, low);
        std::swap(high, low);
      }
      std::uint64_t v = y;
      for (std::size_t i = f->keys.size(); i-- > 0;) {
        const auto [h, l] = splits[i];
        const std::uint64_t r = v >> h;
        const std::uint64_t mixed = v & low_mask(h);
        const std::uint64_t left =
            (mixed ^ feistel_round_function(r, f->keys[i])) & low_mask(h);
        v = (left << l) | r;
      }
      return v;
    }
    throw std::logic_error("custom permutation has no inverse");
  }
};

Permutation::Permutation(std::shared_ptr<const Impl> impl,
                         PermutationDescriptor descriptor)
    : impl_(std::move(impl)), descriptor_(std::move(descriptor)) {}

Permutation Permutation::make(const PermutationDescriptor& d) {
  auto impl = std::make_shared<Impl>();
  impl->n = d.n;
  PermutationDescriptor desc = d;
  switch (d.kind) {
    case PermutationKind::kTable: {
      check_bits(d.n, kMaxTableBits, "table permutation");
      const std::uint32_t size = 1u << d.n;
      Impl::Table t;
      t.forward.resize(size);
      std::iota(t.forward.begin(), t.forward.end(), 0u);
      Rng rng(d.seed);
      for (std::uint32_t i = size - 1; i > 0; --i) {
        const auto j = static_cast<std::uint32_t>(uniform_below(rng, i + 1));
        std::swap(t.forward[i], t.forward[j]);
      }
      t.inverse.resize(size);
      for (std::uint32_t x = 0; x < size; ++x) t.inverse[t.forward[x]] = x;
      impl->rule = std::move(t);
      break;
    }
    case PermutationKind::kOddMultiplier: {
      check_bits(d.n, kMaxBits, "odd_multiplier permutation");
      // Seeded multipliers are forced odd; explicit ones are checked.
      const std::uint64_t factor =
          (d.multiplier ? *d.multiplier : splitmix64(d.seed) | 1) & low_mask(d.n);
      if ((factor & 1) == 0) {
        throw std::invalid_argument("odd_multiplier: multiplier must be odd");
      }
      desc.multiplier = factor;
      impl->rule = Impl::Multiplier{factor, inverse_mod_pow2(factor)};
      break;
    }
    case PermutationKind::kFeistel: {
      check_bits(d.n, kMaxBits, "feistel permutation");
      if (d.rounds < 1) {
        throw std::invalid_argument("feistel: rounds must be >= 1");
      }
      Impl::Feistel f;
      Rng rng(d.seed);
      for (int i = 0; i < d.rounds; ++i) f.keys.push_back(rng());
      impl->rule = std::move(f);
      break;
    }
    case PermutationKind::kCustom:
      throw std::invalid_argument("custom permutations use unchecked()");
  }
  Permutation p(std::move(impl), desc);

  if (d.n <= kMaxTableBits) {
    if (!p.is_bijective()) {
      throw std::logic_error("permutation failed its bijectivity audit");
    }
  } else {
    Rng rng(d.seed ^ 0x5eed);
    for (int i = 0; i < 256; ++i) {
      const std::uint64_t x = rng() & low_mask(d.n);
      if (p.invert(p.apply(x)) != x) {
        throw std::logic_error("permutation failed a round-trip spot check");
      }
    }
  }
  return p;
}

Permutation Permutation::make(PermutationKind kind, int n, std::uint64_t seed) {
  PermutationDescriptor d;
  d.kind = kind;
  d.n = n;
  d.seed = seed;
  return make(d);
}

Permutation Permutation::odd_multiplier(int n, std::uint64_t multiplier) {
  PermutationDescriptor d;
  d.kind = PermutationKind::kOddMultiplier;
  d.n = n;
  d.multiplier = multiplier;
  return make(d);
}

Permutation Permutation::unchecked(
    int n, std::function<std::uint64_t(std::uint64_t)> rule) {
  check_bits(n, kMaxBits, "custom permutation");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->rule = Impl::Custom{std::move(rule)};
  PermutationDescriptor d;
  d.kind = PermutationKind::kCustom;
  d.n = n;
  return Permutation(std::move(impl), d);
}

std::uint64_t Permutation::apply(std::uint64_t x) const {
  return impl_->forward(x & low_mask(n()));
}

BitString Permutation::operator()(const BitString& x) const {
  if (x.size() != n()) {
    throw std::invalid_argument("permutation: input length != n");
  }
  return BitString(n(), apply(x.value()));
}

std::uint64_t Permutation::invert(std::uint64_t y) const {
  return impl_->backward(y & low_mask(n()));
}

bool Permutation::is_bijective() const {
  if (n() > kMaxQubits) {
    throw std::invalid_argument("is_bijective: n too large for exhaustive check");
  }
  const std::uint64_t size = std::uint64_t{1} << n();
  std::vector<std::uint8_t> seen(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    const std::uint64_t y = apply(x);
    if (y >= size || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

std::pair<BitString, BitString> f_tilde(const Permutation& f,
                                        const BitString& y,
                                        const BitString& x) {
  if (y.size() != f.n() || x.size() != f.n()) {
    throw std::invalid_argument("f_tilde: |y| and |x| must equal n");
  }
  return {f(y), x};
}

// ---------------------------------------------------------------------------
// Predictor

Predictor Predictor::from_table(int n, std::vector<std::uint8_t> table) {
  check_bits(n, kMaxTableBits, "table predictor");
  if (table.size() != (std::size_t{1} << (2 * n))) {
    throw std::invalid_argument("table predictor: need 2^(2n) entries");
  }
  for (auto& v : table) v = v ? 1 : 0;
  Predictor p;
  p.n_ = n;
  p.table_ = std::make_shared<const std::vector<std::uint8_t>>(std::move(table));
  return p;
}

Predictor Predictor::from_function(
    int n, std::function<bool(const BitString&, const BitString&)> rule) {
  check_bits(n, BitString::kMaxLength, "function predictor");
  Predictor p;
  p.n_ = n;
  p.rule_ = std::move(rule);
  return p;
}

bool Predictor::operator()(const BitString& b, const BitString& x) const {
  if (b.size() != n_ || x.size() != n_) {
    throw std::invalid_argument("predictor: |b| and |x| must equal n");
  }
  if (table_) return (*table_)[(b.value() << n_) | x.value()] != 0;
  return rule_(b, x);
}

std::span<const std::uint8_t> Predictor::row(std::uint64_t b) const {
  if (!table_) {
    throw UnsupportedModeError("predictor row requested from a non-table predictor");
  }
  const std::size_t width = std::size_t{1} << n_;
  return std::span<const std::uint8_t>(*table_).subspan(b * width, width);
}

Predictor make_synthetic_predictor(const Permutation& f, double delta,
                                   double epsilon, Rng& rng) {
  const int n = f.n();
  check_bits(n, Predictor::kMaxTableBits, "synthetic predictor");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("synthetic predictor: delta must lie in [0, 1]");
  }
  if (!(epsilon >= 0.0 && epsilon <= 0.5) ||
      !is_integral(std::ldexp(epsilon, n))) {
    throw std::invalid_argument(
        "synthetic predictor: need 0 <= epsilon <= 1/2 with epsilon*2^n integral");
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  const auto good_count = static_cast<std::uint64_t>(
      std::ceil(delta * static_cast<double>(size) - 1e-9));
  const auto flips = size / 2 - static_cast<std::uint64_t>(std::ldexp(epsilon, n));

  std::vector<std::uint64_t> keys(size);
  std::iota(keys.begin(), keys.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < good_count && i + 1 < size; ++i) {
    std::swap(keys[i], keys[i + uniform_below(rng, size - i)]);
  }
  std::vector<std::uint8_t> good(size, 0);
  for (std::uint64_t i = 0; i < good_count; ++i) good[keys[i]] = 1;

  std::vector<std::uint8_t> table(size * size);
  std::vector<std::uint64_t> order(size);
  for (std::uint64_t y = 0; y < size; ++y) {
    std::uint8_t* row = table.data() + f.apply(y) * size;
    if (!good[y]) {
      for (std::uint64_t x = 0; x < size; ++x) row[x] = rng() & 1;
      continue;
    }
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < flips; ++i) {
      std::swap(order[i], order[i + uniform_below(rng, size - i)]);
    }
    for (std::uint64_t x = 0; x < size; ++x) row[x] = parity(y & x);
    for (std::uint64_t i = 0; i < flips; ++i) row[order[i]] ^= 1;
  }
  return Predictor::from_table(n, std::move(table));
}

Predictor make_synthetic_predictor(const Permutation& f,
                                   const PredictorDescriptor& d) {
  if (d.n != f.n()) {
    throw std::invalid_argument("predictor descriptor: n differs from f");
  }
  Rng rng(d.seed);
  return make_synthetic_predictor(f, d.delta, d.epsilon, rng);
}

Predictor make_perfect_predictor(const Permutation& f) {
  const int n = f.n();
  if (n <= Predictor::kMaxTableBits) {
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::uint8_t> table(size * size);
    for (std::uint64_t y = 0; y < size; ++y) {
      std::uint8_t* row = table.data() + f.apply(y) * size;
      for (std::uint64_t x = 0; x < size; ++x) row[x] = parity(y & x);
    }
    return Predictor::from_table(n, std::move(table));
  }
  return Predictor::from_function(n, [f](const BitString& b, const BitString& x) {
    return parity(f.invert(b.value()) & x.value());
  });
}

// ---------------------------------------------------------------------------
// Profiles

double PredictionProfile::agreement(std::uint64_t y) const {
  return std::ldexp(static_cast<double>(agreement_counts.at(y)), -n);
}

namespace {

std::uint64_t count_good(const PredictionProfile& p, double epsilon) {
  // Dyadic thresholds keep this comparison exact.
  const double threshold = std::ldexp(0.5 + epsilon, p.n);
  return static_cast<std::uint64_t>(std::count_if(
      p.agreement_counts.begin(), p.agreement_counts.end(),
      [&](std::uint32_t c) { return static_cast<double>(c) >= threshold; }));
}

}  // namespace

double PredictionProfile::good_fraction(double epsilon) const {
  return std::ldexp(static_cast<double>(count_good(*this, epsilon)), -n);
}

bool PredictionProfile::predicts(double delta, double epsilon) const {
  return good_fraction(epsilon) >= delta - 1e-12;
}

PredictionProfile profile_predictor(const Predictor& g, const Permutation& f) {
  const int n = g.n();
  if (f.n() != n) {
    throw std::invalid_argument("profile_predictor: predictor and f differ in n");
  }
  check_bits(n, Predictor::kMaxTableBits, "profile_predictor");
  const std::uint64_t size = std::uint64_t{1} << n;
  PredictionProfile p;
  p.n = n;
  p.agreement_counts.assign(size, 0);
  std::uint64_t total = 0;
  for (std::uint64_t y = 0; y < size; ++y) {
    const BitString b(n, f.apply(y));
    std::uint32_t agree = 0;
    if (g.is_table()) {
      const auto row = g.row(b.value());
      for (std::uint64_t x = 0; x < size; ++x) {
        agree += (row[x] != 0) == parity(y & x) ? 1u : 0u;
      }
    } else {
      for (std::uint64_t x = 0; x < size; ++x) {
        agree += g(b, BitString(n, x)) == parity(y & x) ? 1u : 0u;
      }
    }
    p.agreement_counts[y] = agree;
    total += agree;
  }
  p.mean_agreement = std::ldexp(static_cast<double>(total), -2 * n);

  std::vector<std::uint32_t> levels;
  for (std::uint32_t c : p.agreement_counts) {
    if (2 * static_cast<std::uint64_t>(c) >= size) levels.push_back(c);
  }
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (std::uint32_t c : levels) {
    const double eps = std::ldexp(static_cast<double>(c), -n) - 0.5;
    p.frontier.emplace_back(p.good_fraction(eps), eps);
  }
  return p;
}

bool check_lemma1(const PredictionProfile& profile, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("check_lemma1: epsilon must lie in (0, 1)");
  }
  // good / 2^n >= eps / (1 - eps), multiplied out.
  const double good = static_cast<double>(count_good(profile, epsilon / 2));
  return good * (1.0 - epsilon) >= epsilon * std::ldexp(1.0, profile.n);
}

// ---------------------------------------------------------------------------
// Inversion

IpOracle predictor_ip_oracle(const Predictor& g, const BitString& b) {
  if (b.size() != g.n()) {
    throw std::invalid_argument("predictor_ip_oracle: |b| != n");
  }
  if (g.is_table()) {
    const auto row = g.row(b.value());
    return IpOracle::from_table(g.n(),
                                std::vector<std::uint8_t>(row.begin(), row.end()));
  }
  return IpOracle::from_function(
      g.n(), [g, b](const BitString& x) { return g(b, x); });
}

EqOracle permutation_eq_oracle(const Permutation& f, const BitString& b) {
  if (b.size() != f.n()) {
    throw std::invalid_argument("permutation_eq_oracle: |b| != n");
  }
  return EqOracle::from_predicate(
      f.n(),
      [f, target = b.value()](const BitString& x) {
        return f.apply(x.value()) == target;
      },
      /*counts_f_calls=*/true);
}

SolveReport invert_with_predictor(const Permutation& f, const Predictor& g,
                                  const BitString& b,
                                  const InverterOptions& options, Rng& rng) {
  if (g.n() != f.n()) {
    throw std::invalid_argument("invert_with_predictor: predictor and f differ in n");
  }
  EqOracle eq = permutation_eq_oracle(f, b);
  SolveReport report;
  if (options.mode == InversionMode::kQuantum) {
    if (!g.is_table()) {
      throw UnsupportedModeError("quantum inversion needs a table predictor");
    }
    if (f.n() > kMaxQuantumInversionBits) {
      throw std::invalid_argument("quantum inversion supports n <= " +
                                  std::to_string(kMaxQuantumInversionBits));
    }
    IpOracle ip = predictor_ip_oracle(g, b);
    report = solve_qsearch(ip, eq, options.qsearch, rng);
  } else {
    IpOracle ip = predictor_ip_oracle(g, b);
    const DecoderParams params =
        derive_params(f.n(), options.epsilon, options.target_success);
    report = solve_classical(ip, eq, params, rng);
  }
  if (report.found && f(*report.found).value() != b.value()) {
    throw std::logic_error("inverter returned a non-preimage");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Descriptors

std::string permutation_descriptor_to_json(const PermutationDescriptor& d) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(d.kind);
  j["n"] = d.n;
  j["seed"] = d.seed;
  if (d.multiplier) j["multiplier"] = *d.multiplier;
  if (d.kind == PermutationKind::kFeistel) j["rounds"] = d.rounds;
  if (d.hardness_delta) j["hardness_delta"] = *d.hardness_delta;
  if (d.hardness_size) j["hardness_size"] = *d.hardness_size;
  return j.dump();
}

PermutationDescriptor permutation_descriptor_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  PermutationDescriptor d;
  d.kind = permutation_kind_from_string(j.at("kind").get<std::string>());
  d.n = j.at("n").get<int>();
  d.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("multiplier")) d.multiplier = j.at("multiplier").get<std::uint64_t>();
  d.rounds = j.value("rounds", 4);
  if (j.contains("hardness_delta")) d.hardness_delta = j.at("hardness_delta").get<double>();
  if (j.contains("hardness_size")) d.hardness_size = j.at("hardness_size").get<double>();
  return d;
}

std::string predictor_descriptor_to_json(const PredictorDescriptor& d) {
  nlohmann::ordered_json j;
  j["n"] = d.n;
  j["seed"] = d.seed;
  j["delta"] = d.delta;
  j["epsilon"] = d.epsilon;
  return j.dump();
}

PredictorDescriptor predictor_descriptor_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  PredictorDescriptor d;
  d.n = j.at("n").get<int>();
  d.seed = j.value("seed", std::uint64_t{0});
  d.delta = j.at("delta").get<double>();
  d.epsilon = j.at("epsilon").get<double>();
  return d;
}

}  // namespace glq

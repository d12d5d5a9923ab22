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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glq {

enum class SolverKind { kQuantumNaive, kQuantumQSearch, kClassical };

std::string to_string(SolverKind solver);
SolverKind solver_from_string(const std::string& name);

struct ExperimentConfig {
  std::string subcommand = "scaling";
  std::vector<int> n = {10};
  std::vector<double> epsilon = {0.125};
  std::uint64_t trials = 10;
  std::uint64_t seed = 1;
  // auto | biased_set | rotation | lazy. auto picks lazy for classical runs
  // with n > 20 and biased_set otherwise.
  std::string family = "auto";
  SolverKind solver = SolverKind::kQuantumQSearch;
  std::string output = "-";
  // Classical decoder target success.
  double target_success = 0.5;
  double growth = 1.2;
  int max_rounds = 40;
  // 0 selects ceil(3 / (4 eps^2)).
  std::uint64_t naive_budget = 0;
  // Inversion and commitment demos.
  std::string permutation = "table";
  double delta = 1.0;
  std::string state = "0";
  std::uint64_t hiding_trials = 10000;
  // 0 uses the hardware concurrency.
  unsigned threads = 0;
  // Record wall-clock time in elapsed_ms (breaks byte-identical output).
  bool timing = false;

  void validate() const;
};

// Invalid configuration; field() names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

ExperimentConfig parse_config(std::string_view json_text);

// Accepts 0.125 or "1/8".
double parse_epsilon(const std::string& text);

struct ResultRow {
  int n = 0;
  double epsilon = 0.0;
  std::uint64_t trial = 0;
  std::string solver;
  bool success = false;
  std::uint64_t ip_fwd = 0;
  std::uint64_t ip_inv = 0;
  std::uint64_t eq = 0;
  std::uint64_t f_calls = 0;
  std::uint64_t rounds = 0;
  std::uint64_t elapsed_ms = 0;

  std::uint64_t total_queries() const { return ip_fwd + ip_inv + eq; }
  bool operator==(const ResultRow&) const = default;
};

inline constexpr std::string_view kCsvHeader =
    "n,epsilon,trial,solver,success,ip_fwd,ip_inv,eq,f_calls,rounds,elapsed_ms";

// mix_seed(base, n, eps * 2^n, trial).
std::uint64_t trial_seed(std::uint64_t base, int n, double epsilon,
                         std::uint64_t trial);

// Fresh planted secret and oracles per (n, epsilon, trial).
std::vector<ResultRow> run_scaling_experiment(const ExperimentConfig& config);

// Fixed f and synthetic (delta, epsilon) predictor per (n, epsilon) cell;
// uniform a per trial.
std::vector<ResultRow> run_inversion_experiment(const ExperimentConfig& config);

// JSON-lines transcripts plus audits.
void run_commit_demo(const ExperimentConfig& config, std::ostream& out);
void run_qubit_commit_demo(const ExperimentConfig& config, std::ostream& out);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
// "-" writes to stdout. Throws std::runtime_error naming the path on failure.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::vector<ResultRow> read_csv(std::istream& in);

std::string format_double(double v);

}  // namespace glq

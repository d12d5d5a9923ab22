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

#include "glq/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "glq/commitment.h"
#include "glq/gl_classical.h"
#include "glq/gl_quantum.h"
#include "glq/oracles.h"
#include "glq/reduction.h"
#include "json.hpp"

namespace glq {

namespace {

using Json = nlohmann::json;

constexpr int kLazyThreshold = 20;

template <typename T>
T get_field(const Json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(key, std::string("wrong type: ") + e.what());
  }
}

std::uint64_t numerator_or_zero(double epsilon, int n) {
  return is_dyadic_for(epsilon, n) ? epsilon_numerator(epsilon, n) : 0;
}

IpFamily resolve_family(const ExperimentConfig& cfg, int n) {
  if (cfg.family == "auto") {
    return cfg.solver == SolverKind::kClassical && n > kLazyThreshold
               ? IpFamily::kLazy
               : IpFamily::kBiasedSet;
  }
  return ip_family_from_string(cfg.family);
}

struct Cell {
  int n;
  double epsilon;
};

std::vector<Cell> cells_of(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (int n : cfg.n) {
    for (double e : cfg.epsilon) cells.push_back({n, e});
  }
  return cells;
}

// Runs fn(index) for index in [0, count) across threads; each index writes
// only its own output slot.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn fn) {
  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(count, 256))));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      (void)w;
      while (!failed.load()) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

ResultRow row_from(const Cell& cell, std::uint64_t trial, SolverKind solver,
                   const SolveReport& report) {
  ResultRow row;
  row.n = cell.n;
  row.epsilon = cell.epsilon;
  row.trial = trial;
  row.solver = to_string(solver);
  row.success = report.success();
  row.ip_fwd = report.tally.ip_forward;
  row.ip_inv = report.tally.ip_inverse;
  row.eq = report.tally.eq;
  row.f_calls = report.tally.f_calls;
  row.rounds = report.rounds;
  return row;
}

std::uint64_t naive_budget_for(const ExperimentConfig& cfg, double epsilon) {
  if (cfg.naive_budget) return cfg.naive_budget;
  return static_cast<std::uint64_t>(std::ceil(3.0 / (4.0 * epsilon * epsilon)));
}

bool is_quantum(SolverKind s) { return s != SolverKind::kClassical; }

void guard_qubits(const ExperimentConfig& cfg, int n) {
  if (is_quantum(cfg.solver) && n + 2 > kMaxQubits) {
    throw ResourceLimitError("quantum solver needs " + std::to_string(n + 2) +
                             " qubits; limit is " + std::to_string(kMaxQubits));
  }
}

StateVector named_state(const std::string& name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "0") return StateVector(1);
  if (name == "1") return StateVector::basis(1, BitString::parse("1"));
  if (name == "+") return StateVector::from_amplitudes({r, r});
  if (name == "-") return StateVector::from_amplitudes({r, -r});
  if (name == "+i") return StateVector::from_amplitudes({r, Amplitude(0, r)});
  if (name == "-i") return StateVector::from_amplitudes({r, Amplitude(0, -r)});
  throw ConfigError("state", "expected one of 0, 1, +, -, +i, -i");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::istream& in, bool& ok) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool any = false;
  char ch;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      break;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  ok = any;
  if (any) fields.push_back(std::move(field));
  return fields;
}

template <typename T>
T parse_number(const std::string& s) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("csv: bad number '" + s + "'");
  }
  return value;
}

}  // namespace

std::string to_string(SolverKind solver) {
  switch (solver) {
    case SolverKind::kQuantumNaive:
      return "quantum_naive";
    case SolverKind::kQuantumQSearch:
      return "quantum_qsearch";
    case SolverKind::kClassical:
      return "classical";
  }
  return "unknown";
}

SolverKind solver_from_string(const std::string& name) {
  if (name == "quantum_naive") return SolverKind::kQuantumNaive;
  if (name == "quantum_qsearch") return SolverKind::kQuantumQSearch;
  if (name == "classical") return SolverKind::kClassical;
  throw ConfigError("solver", "unknown solver '" + name +
                                  "' (expected quantum_naive, quantum_qsearch, classical)");
}

double parse_epsilon(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return std::stod(text);
    const double num = std::stod(text.substr(0, slash));
    const double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return num / den;
  } catch (const std::exception&) {
    throw ConfigError("epsilon", "cannot parse '" + text + "'");
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void ExperimentConfig::validate() const {
  static const std::vector<std::string> kSubcommands = {
      "quantum-gl", "classical-gl", "invert",
      "commit-demo", "qubit-commit-demo", "scaling"};
  if (std::find(kSubcommands.begin(), kSubcommands.end(), subcommand) ==
      kSubcommands.end()) {
    throw ConfigError("subcommand", "unknown subcommand '" + subcommand + "'");
  }
  if (n.empty()) throw ConfigError("n", "need at least one value");
  for (int v : n) {
    if (v < 1 || v > 62) throw ConfigError("n", "values must lie in 1..62");
  }
  if (epsilon.empty()) throw ConfigError("epsilon", "need at least one value");
  const bool demo = subcommand == "commit-demo" || subcommand == "qubit-commit-demo";
  if (!demo) {
    for (int v : n) {
      for (double e : epsilon) {
        if (!is_dyadic_for(e, v)) {
          throw ConfigError("epsilon", "epsilon " + format_double(e) +
                                           " times 2^" + std::to_string(v) +
                                           " is not an integer in (0, 2^(n-1)]");
        }
      }
    }
  }
  if (trials < 1) throw ConfigError("trials", "must be >= 1");
  if (family != "auto") {
    try {
      const IpFamily f = ip_family_from_string(family);
      if (f == IpFamily::kTable || f == IpFamily::kFunction) {
        throw std::invalid_argument("not selectable");
      }
      if (f == IpFamily::kLazy && is_quantum(solver) && !demo &&
          subcommand != "invert") {
        throw ConfigError("family", "lazy oracles are classical-query only");
      }
    } catch (const std::invalid_argument&) {
      throw ConfigError("family", "unknown family '" + family +
                                      "' (expected auto, biased_set, rotation, lazy)");
    }
  }
  if (!(target_success > 0.0 && target_success < 1.0)) {
    throw ConfigError("target_success", "must lie in (0, 1)");
  }
  if (!(growth > 1.0 && growth < 2.0)) {
    throw ConfigError("growth", "must lie in (1, 2)");
  }
  if (max_rounds < 1) throw ConfigError("max_rounds", "must be >= 1");
  try {
    permutation_kind_from_string(permutation);
  } catch (const std::invalid_argument&) {
    throw ConfigError("permutation", "unknown permutation kind '" + permutation + "'");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw ConfigError("delta", "must lie in [0, 1]");
  }
  if (hiding_trials < 1000) throw ConfigError("hiding_trials", "must be >= 1000");
  if (subcommand == "qubit-commit-demo") named_state(state);
}

ExperimentConfig parse_config(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("<json>", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("<json>", "top level must be an object");

  static const std::vector<std::string> kKnown = {
      "subcommand", "n",       "epsilon",      "trials",      "seed",
      "family",     "solver",  "output",       "target_success", "growth",
      "max_rounds", "naive_budget", "permutation", "delta",    "state",
      "hiding_trials", "threads", "timing"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw ConfigError(key, "unknown field");
    }
  }

  ExperimentConfig cfg;
  if (j.contains("subcommand")) cfg.subcommand = get_field<std::string>(j, "subcommand");
  if (j.contains("n")) {
    const auto& v = j.at("n");
    cfg.n = v.is_array() ? get_field<std::vector<int>>(j, "n")
                         : std::vector<int>{get_field<int>(j, "n")};
  }
  if (j.contains("epsilon")) {
    const auto& v = j.at("epsilon");
    cfg.epsilon.clear();
    const auto take = [&](const Json& e) {
      if (e.is_string()) {
        cfg.epsilon.push_back(parse_epsilon(e.get<std::string>()));
      } else if (e.is_number()) {
        cfg.epsilon.push_back(e.get<double>());
      } else {
        throw ConfigError("epsilon", "entries must be numbers or \"p/q\" strings");
      }
    };
    if (v.is_array()) {
      for (const auto& e : v) take(e);
    } else {
      take(v);
    }
  }
  if (j.contains("trials")) cfg.trials = get_field<std::uint64_t>(j, "trials");
  if (j.contains("seed")) cfg.seed = get_field<std::uint64_t>(j, "seed");
  if (j.contains("family")) cfg.family = get_field<std::string>(j, "family");
  if (j.contains("solver")) cfg.solver = solver_from_string(get_field<std::string>(j, "solver"));
  if (j.contains("output")) cfg.output = get_field<std::string>(j, "output");
  if (j.contains("target_success")) cfg.target_success = get_field<double>(j, "target_success");
  if (j.contains("growth")) cfg.growth = get_field<double>(j, "growth");
  if (j.contains("max_rounds")) cfg.max_rounds = get_field<int>(j, "max_rounds");
  if (j.contains("naive_budget")) cfg.naive_budget = get_field<std::uint64_t>(j, "naive_budget");
  if (j.contains("permutation")) cfg.permutation = get_field<std::string>(j, "permutation");
  if (j.contains("delta")) cfg.delta = get_field<double>(j, "delta");
  if (j.contains("state")) cfg.state = get_field<std::string>(j, "state");
  if (j.contains("hiding_trials")) cfg.hiding_trials = get_field<std::uint64_t>(j, "hiding_trials");
  if (j.contains("threads")) cfg.threads = get_field<unsigned>(j, "threads");
  if (j.contains("timing")) cfg.timing = get_field<bool>(j, "timing");
  cfg.validate();
  return cfg;
}

std::uint64_t trial_seed(std::uint64_t base, int n, double epsilon,
                         std::uint64_t trial) {
  return mix_seed({base, static_cast<std::uint64_t>(n),
                   numerator_or_zero(epsilon, n), trial});
}

std::vector<ResultRow> run_scaling_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto cells = cells_of(cfg);
  for (const Cell& c : cells) guard_qubits(cfg, c.n);

  std::vector<ResultRow> rows(cells.size() * cfg.trials);
  const QSearchParams qparams{cfg.growth, cfg.max_rounds};
  parallel_for(rows.size(), cfg.threads, [&](std::uint64_t index) {
    const Cell& cell = cells[index / cfg.trials];
    const std::uint64_t trial = index % cfg.trials;
    const auto start = std::chrono::steady_clock::now();

    OracleSpec spec;
    spec.family = resolve_family(cfg, cell.n);
    spec.n = cell.n;
    spec.epsilon = cell.epsilon;
    spec.seed = trial_seed(cfg.seed, cell.n, cell.epsilon, trial);
    PlantedInstance inst = make_instance(spec);
    Rng rng(splitmix64(spec.seed));

    SolveReport report;
    switch (cfg.solver) {
      case SolverKind::kQuantumNaive:
        report = solve_naive(inst.ip, inst.eq,
                             naive_budget_for(cfg, cell.epsilon), rng);
        break;
      case SolverKind::kQuantumQSearch:
        report = solve_qsearch(inst.ip, inst.eq, qparams, rng);
        break;
      case SolverKind::kClassical:
        report = solve_classical(
            inst.ip, inst.eq,
            derive_params(cell.n, cell.epsilon, cfg.target_success), rng);
        break;
    }
    if (report.found && report.found->value() != inst.secret.value()) {
      throw std::logic_error("solver reported a wrong secret");
    }
    if (report.tally != inst.ip.tally() + inst.eq.tally()) {
      throw std::logic_error("solver tally disagrees with oracle tallies");
    }
    ResultRow row = row_from(cell, trial, cfg.solver, report);
    if (cfg.timing) {
      row.elapsed_ms = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::milliseconds>(
              std::chrono::steady_clock::now() - start)
              .count());
    }
    rows[index] = std::move(row);
  });
  return rows;
}

std::vector<ResultRow> run_inversion_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.solver == SolverKind::kQuantumNaive) {
    throw ConfigError("solver", "invert supports quantum_qsearch or classical");
  }
  std::vector<ResultRow> rows;
  for (const Cell& cell : cells_of(cfg)) {
    guard_qubits(cfg, cell.n);
    if (cell.n > Predictor::kMaxTableBits) {
      throw ResourceLimitError("synthetic predictors need n <= " +
                               std::to_string(Predictor::kMaxTableBits));
    }
    const std::uint64_t num = numerator_or_zero(cell.epsilon, cell.n);
    PermutationDescriptor pd;
    pd.kind = permutation_kind_from_string(cfg.permutation);
    pd.n = cell.n;
    pd.seed = mix_seed({cfg.seed, static_cast<std::uint64_t>(cell.n), num, ~0ULL});
    const Permutation f = Permutation::make(pd);
    PredictorDescriptor gd;
    gd.n = cell.n;
    gd.seed = mix_seed({cfg.seed, static_cast<std::uint64_t>(cell.n), num, ~1ULL});
    gd.delta = cfg.delta;
    gd.epsilon = cell.epsilon;
    const Predictor g = make_synthetic_predictor(f, gd);

    InverterOptions options;
    options.mode = cfg.solver == SolverKind::kClassical ? InversionMode::kClassical
                                                        : InversionMode::kQuantum;
    options.qsearch = {cfg.growth, cfg.max_rounds};
    options.epsilon = cell.epsilon;
    options.target_success = cfg.target_success;

    std::vector<ResultRow> cell_rows(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t trial) {
      const auto start = std::chrono::steady_clock::now();
      Rng rng(trial_seed(cfg.seed, cell.n, cell.epsilon, trial));
      const BitString a(cell.n, rng() & low_mask(cell.n));
      const BitString b = f(a);
      const SolveReport report = invert_with_predictor(f, g, b, options, rng);
      ResultRow row = row_from(cell, trial, cfg.solver, report);
      if (cfg.timing) {
        row.elapsed_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count());
      }
      cell_rows[trial] = std::move(row);
    });
    rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
  }
  return rows;
}

void run_commit_demo(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  const int n = cfg.n.front();
  const Permutation f = Permutation::make(permutation_kind_from_string(cfg.permutation),
                                          n, mix_seed({cfg.seed, 0xc0ffeeULL}));
  out << permutation_descriptor_to_json(f.descriptor()) << '\n';
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(mix_seed({cfg.seed, static_cast<std::uint64_t>(n), trial}));
    const bool z = (rng() & 1) != 0;
    const auto [com, open] = commit_bit(f, z, rng);
    out << commit_message_json(com) << '\n' << opening_json(open) << '\n';
    const auto accepted = decommit_bit(f, com, open);
    nlohmann::ordered_json verdict;
    verdict["phase"] = "verify";
    verdict["accepted"] = accepted.has_value();
    verdict["bit"] = accepted ? (*accepted ? 1 : 0) : -1;
    verdict["committed"] = z ? 1 : 0;
    if (n <= 12) verdict["binding_count"] = audit_binding(f, com);
    out << verdict.dump() << '\n';
  }
}

void run_qubit_commit_demo(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  const int n = cfg.n.front();
  const Permutation f = Permutation::make(permutation_kind_from_string(cfg.permutation),
                                          n, mix_seed({cfg.seed, 0xc0ffeeULL}));
  const StateVector psi = named_state(cfg.state);
  out << permutation_descriptor_to_json(f.descriptor()) << '\n';
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(mix_seed({cfg.seed, static_cast<std::uint64_t>(n), trial}));
    const auto [com, open] = commit_qubit(f, psi, rng);
    out << qubit_commit_message_json(com) << '\n'
        << qubit_opening_json(open) << '\n';
    const auto revealed = decommit_qubit(f, com, open);
    nlohmann::ordered_json verdict;
    verdict["phase"] = "verify";
    verdict["accepted"] = revealed.has_value();
    verdict["fidelity"] = revealed ? std::norm(overlap(psi, *revealed)) : 0.0;
    out << verdict.dump() << '\n';
  }
  Rng rng(mix_seed({cfg.seed, static_cast<std::uint64_t>(n), ~0ULL}));
  const HidingReport report = audit_qubit_hiding(f, psi, cfg.hiding_trials, rng);
  nlohmann::ordered_json j;
  j["phase"] = "hiding_audit";
  j["n"] = report.n;
  j["trials"] = report.trials;
  j["exact_trace_distance"] = report.exact_distance;
  j["empirical_trace_distance"] = report.empirical_distance;
  j["sigma"] = report.sigma;
  j["bound"] = report.bound;
  out << j.dump() << '\n';
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << r.n << ',' << format_double(r.epsilon) << ',' << r.trial << ','
        << csv_field(r.solver) << ',' << (r.success ? 1 : 0) << ',' << r.ip_fwd
        << ',' << r.ip_inv << ',' << r.eq << ',' << r.f_calls << ',' << r.rounds
        << ',' << r.elapsed_ms << '\n';
  }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  if (path == "-") {
    write_csv(std::cout, rows);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(file, rows);
  file.flush();
  if (!file) throw std::runtime_error("write failed for " + path);
}

std::vector<ResultRow> read_csv(std::istream& in) {
  bool ok = false;
  const auto header = split_csv_line(in, ok);
  std::string joined;
  for (std::size_t i = 0; i < header.size(); ++i) {
    joined += (i ? "," : "") + header[i];
  }
  if (!ok || joined != kCsvHeader) {
    throw std::runtime_error("csv: unexpected header '" + joined + "'");
  }
  std::vector<ResultRow> rows;
  while (true) {
    const auto fields = split_csv_line(in, ok);
    if (!ok) break;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 11) {
      throw std::runtime_error("csv: expected 11 fields, got " +
                               std::to_string(fields.size()));
    }
    ResultRow r;
    r.n = parse_number<int>(fields[0]);
    r.epsilon = parse_number<double>(fields[1]);
    r.trial = parse_number<std::uint64_t>(fields[2]);
    r.solver = fields[3];
    r.success = parse_number<int>(fields[4]) != 0;
    r.ip_fwd = parse_number<std::uint64_t>(fields[5]);
    r.ip_inv = parse_number<std::uint64_t>(fields[6]);
    r.eq = parse_number<std::uint64_t>(fields[7]);
    r.f_calls = parse_number<std::uint64_t>(fields[8]);
    r.rounds = parse_number<std::uint64_t>(fields[9]);
    r.elapsed_ms = parse_number<std::uint64_t>(fields[10]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace glq

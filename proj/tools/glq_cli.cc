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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "glq/experiment.h"
#include "glq/statevector.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

struct Overrides {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out;
  std::uint64_t trials = 0;
  bool timing = false;
};

glq::ExperimentConfig load(const std::string& subcommand, CLI::App* sub,
                           const Overrides& o) {
  glq::ExperimentConfig cfg;
  if (!o.config_path.empty()) {
    std::ifstream file(o.config_path);
    if (!file) throw glq::ConfigError("--config", "cannot read " + o.config_path);
    std::stringstream text;
    text << file.rdbuf();
    cfg = glq::parse_config(text.str());
  }
  cfg.subcommand = subcommand;
  if (subcommand == "quantum-gl" && !sub->get_option("--solver")->count()) {
    if (cfg.solver == glq::SolverKind::kClassical) {
      cfg.solver = glq::SolverKind::kQuantumQSearch;
    }
  }
  if (subcommand == "classical-gl") cfg.solver = glq::SolverKind::kClassical;
  if (sub->get_option("--seed")->count()) cfg.seed = o.seed;
  if (sub->get_option("--out")->count()) cfg.output = o.out;
  if (sub->get_option("--trials")->count()) cfg.trials = o.trials;
  if (o.timing) cfg.timing = true;
  cfg.validate();
  return cfg;
}

void run_demo(const glq::ExperimentConfig& cfg, bool qubit) {
  auto run = [&](std::ostream& out) {
    if (qubit) {
      glq::run_qubit_commit_demo(cfg, out);
    } else {
      glq::run_commit_demo(cfg, out);
    }
  };
  if (cfg.output == "-") {
    run(std::cout);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + cfg.output + " for writing");
  run(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Goldreich-Levin query experiments: quantum and classical solvers, the "
      "predictor-to-inverter reduction, and bit/qubit commitment demos.\n"
      "Defaults: n=[10], epsilon=[1/8], trials=10, seed=1, solver=quantum_qsearch, "
      "family=auto, growth=1.2, max_rounds=40, target_success=0.5, "
      "permutation=table, delta=1, out=- (stdout)."};
  app.require_subcommand(1);

  Overrides o;
  std::string solver_flag;
  const struct {
    const char* name;
    const char* help;
  } kCommands[] = {
      {"quantum-gl", "Quantum GL solver grid; CSV rows"},
      {"classical-gl", "Classical list-decoding GL solver grid; CSV rows"},
      {"scaling", "Solver grid using the configured solver; CSV rows"},
      {"invert", "Invert f(a) from a synthetic predictor; CSV rows"},
      {"commit-demo", "Bit commitment transcripts and binding audits; JSON lines"},
      {"qubit-commit-demo", "Qubit commitment transcripts and hiding audit; JSON lines"},
  };
  for (const auto& cmd : kCommands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--config", o.config_path, "JSON experiment config");
    sub->add_option("--seed", o.seed, "Base seed (default 1)");
    sub->add_option("--out", o.out, "Output path, - for stdout (default -)");
    sub->add_option("--trials", o.trials, "Trials per (n, epsilon) cell (default 10)");
    sub->add_option("--solver", solver_flag,
                    "quantum_naive | quantum_qsearch | classical");
    sub->add_flag("--timing", o.timing, "Record elapsed_ms (output no longer deterministic)");
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    glq::ExperimentConfig cfg = load(name, sub, o);
    if (sub->get_option("--solver")->count()) {
      cfg.solver = glq::solver_from_string(solver_flag);
      cfg.validate();
    }
    if (name == "commit-demo") {
      run_demo(cfg, false);
    } else if (name == "qubit-commit-demo") {
      run_demo(cfg, true);
    } else if (name == "invert") {
      glq::emit_csv(glq::run_inversion_experiment(cfg), cfg.output);
    } else {
      glq::emit_csv(glq::run_scaling_experiment(cfg), cfg.output);
    }
  } catch (const glq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const glq::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

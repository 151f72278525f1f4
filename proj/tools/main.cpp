// Copyright 2026 The tnload Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using tnload::cli::RunConfig;

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input", cfg.input, "Input file (.vec, .ppm, .csv, .pdb)");
  cmd->add_option("--kind", cfg.kind, "Input kind; inferred from the extension by default")
      ->check(CLI::IsMember({"image", "csv", "pdb", "vec"}));
  cmd->add_option("--column", cfg.column, "CSV column name or zero-based index");
  cmd->add_option("--series", cfg.series, "CSV series kind")
      ->check(CLI::IsMember({"finance", "fluid"}));
  cmd->add_option("--qubits", cfg.qubits, "Register size (automatic for .vec when omitted)");
  cmd->add_option("--synthetic", cfg.synthetic,
                  "Built-in vector: basis, ghz, random, gaussian, bimodal, sine, "
                  "sine_mix, piecewise_quad, piecewise_abs");
  cmd->add_option("--seed", cfg.seed, "Seed for synthetic vectors");
  cmd->add_option("--out", cfg.out, "Output directory");
}

void add_target_options(CLI::App* cmd, RunConfig& cfg) {
  auto* eps = cmd->add_option("--target-eps", cfg.target_eps,
                              "Smallest depth meeting this error")
                  ->check(CLI::PositiveNumber);
  cmd->add_option("--metric", cfg.metric, "Metric for --target-eps")
      ->check(CLI::IsMember({"l2", "momentum", "rmsd"}))
      ->needs(eps);
  cmd->add_flag("--relative", cfg.relative, "Scale --target-eps by the input norm")
      ->needs(eps);
  cmd->add_option("--depth-cap", cfg.depth_cap, "Largest depth tried by --target-eps")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile real vectors into staircase circuits of SO(4) gates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compile = app.add_subcommand("compile", "Compile each input vector to a circuit");
  add_input_options(compile, cfg);
  compile->add_option("--algo", cfg.algo, "Compiler (default amlet)")
      ->check(CLI::IsMember({"lbl", "amlet"}));
  auto* depth = compile->add_option("--depth", cfg.depth, "Number of layers")
                    ->check(CLI::PositiveNumber);
  add_target_options(compile, cfg);
  depth->excludes(compile->get_option("--target-eps"));
  compile->add_flag("--omit-timing", cfg.omit_timing,
                    "Leave elapsed time out of the report");

  auto* sweep = app.add_subcommand("sweep", "Tabulate error against depth");
  add_input_options(sweep, cfg);
  sweep->add_option("--corpus", cfg.corpus, "Built-in corpus")
      ->check(CLI::IsMember({"structured", "ghz"}));
  sweep->add_option("--algo", cfg.algo, "Restrict to one compiler")
      ->check(CLI::IsMember({"lbl", "amlet"}));
  sweep->add_option("--depth", cfg.depth, "Largest depth in the table (default 8)")
      ->check(CLI::PositiveNumber);
  add_target_options(sweep, cfg);

  auto* ingest = app.add_subcommand("ingest", "Convert input data to padded .vec windows");
  add_input_options(ingest, cfg);

  auto* simulate = app.add_subcommand("simulate", "Run a .qasm or .circuit.json file");
  simulate->add_option("--input", cfg.input, "Circuit file")->required();
  simulate->add_option("--out", cfg.out, "Output directory");
  simulate->add_option("--compare", cfg.compare, "Data file to measure the errors against");
  simulate->add_option("--kind", cfg.kind, "Kind of the --compare file")
      ->check(CLI::IsMember({"image", "csv", "pdb", "vec"}));
  simulate->add_option("--column", cfg.column, "CSV column of the --compare file");
  simulate->add_option("--series", cfg.series, "CSV series kind")
      ->check(CLI::IsMember({"finance", "fluid"}));
  simulate->add_option("--qubits", cfg.qubits, "Register size of the --compare file");
  simulate->add_option("--check-report", cfg.check_report,
                       "Fail unless the metrics match this report within 1e-10")
      ->needs(simulate->get_option("--compare"));

  auto* exporter = app.add_subcommand("export-qasm", "Write OpenQASM for a .circuit.json file");
  exporter->add_option("--input", cfg.input, "Circuit file")->required();
  exporter->add_option("--out", cfg.out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) {
      cfg.subcommand = "compile";
      return tnload::cli::run_compile(cfg);
    }
    if (sweep->parsed()) {
      cfg.subcommand = "sweep";
      return tnload::cli::run_sweep(cfg);
    }
    if (ingest->parsed()) {
      cfg.subcommand = "ingest";
      return tnload::cli::run_ingest(cfg);
    }
    if (simulate->parsed()) {
      cfg.subcommand = "simulate";
      return tnload::cli::run_simulate(cfg);
    }
    cfg.subcommand = "export-qasm";
    return tnload::cli::run_export_qasm(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "tnload: %s\n", e.what());
    return 1;
  }
}

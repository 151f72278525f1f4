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


#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace tnload::cli {

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string synthetic;
  std::string corpus;
  std::string kind;
  std::string column;
  std::string series = "finance";
  std::string algo;
  std::optional<std::size_t> depth;
  std::optional<double> target_eps;
  std::string metric;
  bool relative = false;
  std::size_t qubits = 0;
  std::string out = ".";
  std::uint64_t seed = 0;
  std::size_t depth_cap = 512;
  std::string compare;
  std::string check_report;
  bool omit_timing = false;
};

// Exit status: 0 on success, 2 when a depth cap was hit (best artifacts are
// still written). Errors are reported by exception.
int run_compile(const RunConfig& cfg);
int run_sweep(const RunConfig& cfg);
int run_ingest(const RunConfig& cfg);
int run_simulate(const RunConfig& cfg);
int run_export_qasm(const RunConfig& cfg);

}  // namespace tnload::cli

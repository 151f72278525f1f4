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


#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tnload/compile.hpp"
#include "tnload/errors.hpp"
#include "tnload/ingest.hpp"
#include "tnload/simulate.hpp"
#include "tnload/synthetic.hpp"

namespace tnload::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr double kReportTolerance = 1e-10;

struct Source {
  std::string stem;
  std::vector<DataVector> vectors;
};

std::string infer_kind(const RunConfig& cfg, const std::string& path) {
  if (!cfg.kind.empty()) return cfg.kind;
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".ppm") return "image";
  if (ext == ".csv") return "csv";
  if (ext == ".pdb") return "pdb";
  if (ext == ".vec" || ext == ".txt") return "vec";
  throw InvalidArgument("cannot infer the kind of " + path + "; pass --kind");
}

std::size_t require_qubits(const RunConfig& cfg, const std::string& kind) {
  if (cfg.qubits == 0) throw InvalidArgument("--qubits is required for " + kind + " input");
  return cfg.qubits;
}

std::vector<DataVector> load_file(const RunConfig& cfg, const std::string& path) {
  const std::string kind = infer_kind(cfg, path);
  try {
    if (kind == "image") return load_image(path, require_qubits(cfg, kind));
    if (kind == "pdb") return load_pdb(path, require_qubits(cfg, kind));
    if (kind == "csv") {
      if (cfg.column.empty()) throw InvalidArgument("--column is required for csv input");
      return load_timeseries(path, cfg.column, require_qubits(cfg, kind),
                             cfg.series == "fluid" ? SeriesKind::Fluid : SeriesKind::Finance);
    }
    return load_vec(path, cfg.qubits);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Source load_source(const RunConfig& cfg) {
  Source src;
  const int given = !cfg.input.empty() + !cfg.synthetic.empty() + !cfg.corpus.empty();
  if (given != 1) {
    throw InvalidArgument("exactly one of --input, --synthetic or --corpus is required");
  }
  if (!cfg.input.empty()) {
    src.stem = fs::path(cfg.input).stem().string();
    src.vectors = load_file(cfg, cfg.input);
    return src;
  }
  const std::size_t n = require_qubits(cfg, "synthetic");
  if (!cfg.synthetic.empty()) {
    DataVector d = synthetic_vector(cfg.synthetic, n, cfg.seed);
    src.stem = d.provenance;
    if (cfg.synthetic == "random" || cfg.synthetic == "basis") {
      src.stem += "_s" + std::to_string(cfg.seed);
      d.provenance = src.stem;
    }
    src.vectors.push_back(std::move(d));
    return src;
  }
  src.stem = cfg.corpus + "_n" + std::to_string(n);
  if (cfg.corpus == "structured") {
    src.vectors = structured_corpus(n);
  } else {
    src.vectors.push_back(synthetic_vector("ghz", n, cfg.seed));
  }
  return src;
}

std::string window_stem(const Source& src, std::size_t k) {
  if (src.vectors.size() == 1) return src.stem;
  return src.stem + "_w" + std::to_string(k);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void prepare_out(const RunConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) throw std::runtime_error("cannot create " + cfg.out + ": " + ec.message());
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json metrics_json(const Metrics& m, const DataVector& d) {
  Json j;
  j["eps_I"] = m.eps_l2;
  j["eps_I_normalized"] = m.eps_l2 / d.norm;
  j["eps_M"] = m.eps_momentum;
  j["eps_A"] = optional_number(m.eps_rmsd);
  j["fidelity"] = m.fidelity;
  return j;
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["subcommand"] = cfg.subcommand;
  if (!cfg.input.empty()) j["input"] = cfg.input;
  if (!cfg.synthetic.empty()) j["synthetic"] = cfg.synthetic;
  if (!cfg.corpus.empty()) j["corpus"] = cfg.corpus;
  if (!cfg.kind.empty()) j["kind"] = cfg.kind;
  if (!cfg.column.empty()) {
    j["column"] = cfg.column;
    j["series"] = cfg.series;
  }
  if (!cfg.algo.empty()) j["algo"] = cfg.algo;
  if (cfg.depth) j["depth"] = *cfg.depth;
  if (cfg.target_eps) {
    j["target_eps"] = *cfg.target_eps;
    j["metric"] = cfg.metric;
    j["relative"] = cfg.relative;
    j["depth_cap"] = cfg.depth_cap;
  }
  j["qubits"] = cfg.qubits;
  j["seed"] = cfg.seed;
  return j;
}

Json circuit_json(const Circuit& c) {
  Json layers = Json::array();
  for (const auto& layer : c.layers) {
    Json gates = Json::array();
    for (const auto& g : layer.gates) {
      Json rows = Json::array();
      for (int r = 0; r < 4; ++r) {
        rows.push_back({g.matrix(r, 0), g.matrix(r, 1), g.matrix(r, 2), g.matrix(r, 3)});
      }
      gates.push_back({{"qubit", g.qubit}, {"matrix", rows}});
    }
    layers.push_back(gates);
  }
  Json j;
  j["num_qubits"] = c.num_qubits;
  j["stored_norm"] = c.stored_norm;
  j["original_length"] = c.original_length;
  j["layers"] = layers;
  return j;
}

Circuit circuit_from_json(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
    Circuit c;
    c.num_qubits = j.at("num_qubits").get<std::size_t>();
    c.stored_norm = j.at("stored_norm").get<double>();
    c.original_length = j.at("original_length").get<std::size_t>();
    for (const auto& layer : j.at("layers")) {
      Layer l;
      for (const auto& g : layer) {
        TwoQubitGate gate;
        gate.qubit = g.at("qubit").get<std::size_t>();
        const auto& rows = g.at("matrix");
        if (rows.size() != 4) throw InvalidArgument("gate matrix must be 4x4");
        for (int r = 0; r < 4; ++r) {
          if (rows[r].size() != 4) throw InvalidArgument("gate matrix must be 4x4");
          for (int k = 0; k < 4; ++k) gate.matrix(r, k) = rows[r][k].get<double>();
        }
        l.gates.push_back(gate);
      }
      c.layers.push_back(std::move(l));
    }
    validate_circuit(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string strip_suffix(std::string name, const std::string& suffix) {
  if (name.size() > suffix.size() &&
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
    name.resize(name.size() - suffix.size());
  }
  return name;
}

std::string circuit_stem(const std::string& path) {
  const std::string name = fs::path(path).filename().string();
  const std::string stripped = strip_suffix(name, ".circuit.json");
  if (stripped != name) return stripped;
  return fs::path(path).stem().string();
}

MetricKind target_metric(const RunConfig& cfg, const DataVector& d) {
  return cfg.metric.empty() ? d.metric : metric_from_string(cfg.metric);
}

double target_threshold(const RunConfig& cfg, const DataVector& d) {
  return cfg.relative ? *cfg.target_eps * d.norm : *cfg.target_eps;
}

Json report_json(const RunConfig& cfg, const DataVector& d, const CompileResult& r,
                 const std::string& status) {
  Json j;
  j["algorithm"] = to_string(r.report.algorithm);
  j["status"] = status;
  j["input"] = d.provenance;
  j["num_qubits"] = d.num_qubits;
  j["original_length"] = d.original_length;
  j["norm"] = d.norm;
  j["depth"] = r.report.depth;
  j["gate_count"] = r.circuit.gate_count();
  j["metrics"] = metrics_json(r.report.measured, d);
  j["per_layer_discarded"] = r.report.per_layer_discarded;
  Json events = Json::array();
  for (const auto& e : r.report.truncation_events) {
    events.push_back({{"svd_index", e.svd_index},
                      {"layer", e.layer},
                      {"cut", e.cut},
                      {"discarded_weight", e.discarded_weight}});
  }
  j["truncation_events"] = events;
  j["max_canonical_deviation"] = r.report.max_canonical_deviation;
  if (!cfg.omit_timing) j["elapsed_seconds"] = r.report.elapsed_seconds;
  j["config"] = config_json(cfg);
  return j;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> reconstruction(const Circuit& c) {
  std::vector<double> state = apply_circuit(c);
  for (double& x : state) x *= c.stored_norm;
  return state;
}

// Width and height recorded by image ingestion as "#WxH".
bool image_shape(const DataVector& d, std::size_t& w, std::size_t& h) {
  const auto hash = d.provenance.rfind('#');
  if (hash == std::string::npos) return false;
  char tail = 0;
  return std::sscanf(d.provenance.c_str() + hash + 1, "%zux%zu%c", &w, &h, &tail) == 2;
}

std::vector<Algorithm> sweep_algorithms(const RunConfig& cfg) {
  if (cfg.algo.empty()) return {Algorithm::Lbl, Algorithm::Amlet};
  return {algorithm_from_string(cfg.algo)};
}

}  // namespace

int run_compile(const RunConfig& cfg) {
  const Source src = load_source(cfg);
  const Algorithm algo = algorithm_from_string(cfg.algo.empty() ? "amlet" : cfg.algo);
  prepare_out(cfg);
  int status = 0;
  for (std::size_t k = 0; k < src.vectors.size(); ++k) {
    const DataVector& d = src.vectors[k];
    CompileResult r;
    std::string outcome = "ok";
    if (cfg.target_eps) {
      try {
        r = compile(d, algo,
                    TargetError{target_metric(cfg, d), target_threshold(cfg, d), cfg.depth_cap});
      } catch (const BudgetExceeded& e) {
        r = e.best();
        outcome = "budget_exceeded";
        status = 2;
      }
    } else {
      r = compile(d, algo, FixedDepth{cfg.depth.value_or(1)});
    }
    const std::string stem = window_stem(src, k);
    const fs::path base = fs::path(cfg.out) / stem;
    write_text(base.string() + ".qasm", emit_qasm(r.circuit));
    write_text(base.string() + ".circuit.json", circuit_json(r.circuit).dump(2) + "\n");
    write_text(base.string() + ".report.json",
               report_json(cfg, d, r, outcome).dump(2) + "\n");
    std::printf("%s: %s depth %zu eps_I %.6g (normalized %.3g) fidelity %.12g%s\n",
                stem.c_str(), to_string(algo).c_str(), r.report.depth,
                r.report.measured.eps_l2, r.report.measured.eps_l2 / d.norm,
                r.report.measured.fidelity,
                outcome == "ok" ? "" : " [depth cap reached]");
  }
  if (status != 0) std::fprintf(stderr, "tnload: depth cap reached before the target error\n");
  return status;
}

int run_sweep(const RunConfig& cfg) {
  const Source src = load_source(cfg);
  const std::size_t max_depth = cfg.depth.value_or(8);
  const auto algorithms = sweep_algorithms(cfg);
  prepare_out(cfg);

  std::string table = "vector_id,n,algorithm,D,eps_I,eps_M,eps_A,fidelity\n";
  std::string minima = "vector_id,n,algorithm,metric,threshold,D,reached\n";
  for (std::size_t k = 0; k < src.vectors.size(); ++k) {
    const DataVector& d = src.vectors[k];
    std::size_t w = 0;
    std::size_t h = 0;
    const bool image = image_shape(d, w, h);
    for (Algorithm algo : algorithms) {
      for (std::size_t depth = 1; depth <= max_depth; ++depth) {
        const CompileResult r = compile(d, algo, FixedDepth{depth});
        const Metrics& m = r.report.measured;
        table += "\"" + d.provenance + "\"," + std::to_string(d.num_qubits) + "," +
                 to_string(algo) + "," + std::to_string(depth) + "," +
                 format_double(m.eps_l2) + "," + format_double(m.eps_momentum) + "," +
                 (m.eps_rmsd ? format_double(*m.eps_rmsd) : std::string()) + "," +
                 format_double(m.fidelity) + "\n";
        if (image) {
          const fs::path ppm = fs::path(cfg.out) / (window_stem(src, k) + "_" +
                                                    to_string(algo) + "_D" +
                                                    std::to_string(depth) + ".ppm");
          write_text(ppm, encode_ppm(vector_to_image(reconstruction(r.circuit), w, h)));
        }
      }
      if (cfg.target_eps) {
        const MetricKind metric = target_metric(cfg, d);
        const double threshold = target_threshold(cfg, d);
        std::size_t depth = 0;
        bool reached = true;
        try {
          depth = compile(d, algo, TargetError{metric, threshold, cfg.depth_cap}).report.depth;
        } catch (const BudgetExceeded& e) {
          depth = e.best().report.depth;
          reached = false;
        }
        minima += "\"" + d.provenance + "\"," + std::to_string(d.num_qubits) + "," +
                  to_string(algo) + "," + to_string(metric) + "," + format_double(threshold) +
                  "," + std::to_string(depth) + "," + (reached ? "true" : "false") + "\n";
      }
    }
  }
  write_text(fs::path(cfg.out) / (src.stem + ".sweep.csv"), table);
  if (cfg.target_eps) write_text(fs::path(cfg.out) / (src.stem + ".min_depth.csv"), minima);
  std::printf("%zu vectors, depths 1..%zu written to %s\n", src.vectors.size(), max_depth,
              (fs::path(cfg.out) / (src.stem + ".sweep.csv")).string().c_str());
  return 0;
}

int run_ingest(const RunConfig& cfg) {
  const Source src = load_source(cfg);
  prepare_out(cfg);
  Json summary = Json::array();
  for (std::size_t k = 0; k < src.vectors.size(); ++k) {
    const DataVector& d = src.vectors[k];
    const std::string file = window_stem(src, k) + ".vec";
    write_text(fs::path(cfg.out) / file, format_vec(d.values));
    Json j;
    j["file"] = file;
    j["input"] = d.provenance;
    j["num_qubits"] = d.num_qubits;
    j["original_length"] = d.original_length;
    j["norm"] = d.norm;
    j["metric"] = to_string(d.metric);
    j["atom_count"] = d.atom_count ? Json(*d.atom_count) : Json(nullptr);
    summary.push_back(j);
  }
  const std::string text = summary.dump(2) + "\n";
  write_text(fs::path(cfg.out) / (src.stem + ".ingest.json"), text);
  std::fputs(text.c_str(), stdout);
  return 0;
}

int run_simulate(const RunConfig& cfg) {
  std::vector<double> approx;
  std::size_t n = 0;
  const std::string name = fs::path(cfg.input).filename().string();
  if (name.size() > 13 && name.ends_with(".circuit.json")) {
    const Circuit c = circuit_from_json(cfg.input);
    n = c.num_qubits;
    approx = reconstruction(c);
  } else {
    NativeProgram p;
    try {
      p = parse_qasm(read_file(cfg.input));
    } catch (const ParseError& e) {
      throw std::runtime_error(cfg.input + ": " + e.what());
    }
    n = p.num_qubits;
    approx = real_amplitudes(simulate_native(p));
    for (double& x : approx) x *= p.stored_norm;
  }

  Json j;
  j["input"] = cfg.input;
  j["num_qubits"] = n;
  if (!cfg.compare.empty()) {
    const auto data = load_file(cfg, cfg.compare);
    if (data.size() != 1) {
      throw InvalidArgument("--compare must produce exactly one window");
    }
    const DataVector& d = data[0];
    if (d.values.size() != approx.size()) {
      throw InvalidArgument("--compare register size differs from the circuit");
    }
    // A global phase is not observable; align the sign with the data.
    double dot = 0.0;
    for (std::size_t i = 0; i < approx.size(); ++i) dot += approx[i] * d.values[i];
    if (dot < 0.0) {
      for (double& x : approx) x = -x;
    }
    j["metrics"] = metrics_json(compute_metrics(d, approx), d);
    if (!cfg.check_report.empty()) {
      const Json report = Json::parse(read_file(cfg.check_report)).at("metrics");
      double worst = 0.0;
      for (const char* key : {"eps_I", "eps_M", "eps_A", "fidelity"}) {
        const Json& got = j["metrics"][key];
        const Json& want = report.at(key);
        if (got.is_null() != want.is_null()) {
          throw std::runtime_error(std::string("report disagrees on ") + key);
        }
        if (!got.is_null()) {
          worst = std::max(worst, std::abs(got.get<double>() - want.get<double>()));
        }
      }
      j["report_difference"] = worst;
      if (!(worst <= kReportTolerance)) {
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
        throw std::runtime_error("simulated metrics differ from the report");
      }
    }
  }
  prepare_out(cfg);
  const std::string stem = circuit_stem(cfg.input);
  write_text(fs::path(cfg.out) / (stem + ".sim.vec"), format_vec(approx));
  const std::string text = j.dump(2) + "\n";
  std::fputs(text.c_str(), stdout);
  return 0;
}

int run_export_qasm(const RunConfig& cfg) {
  const Circuit c = circuit_from_json(cfg.input);
  prepare_out(cfg);
  const fs::path out = fs::path(cfg.out) / (circuit_stem(cfg.input) + ".qasm");
  write_text(out, emit_qasm(c));
  std::printf("%s\n", out.string().c_str());
  return 0;
}

}  // namespace tnload::cli

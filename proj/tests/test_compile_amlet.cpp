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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "tnload/compile_amlet.hpp"
#include "tnload/compile_lbl.hpp"
#include "tnload/errors.hpp"
#include "tnload/simulate.hpp"
#include "tnload/synthetic.hpp"

using namespace tnload;

namespace {

DataVector named(const std::vector<double>& v) {
  return make_data_vector(v, 0, MetricKind::L2, "test");
}

double max_gate_difference(const Circuit& a, const Circuit& b) {
  double worst = 0.0;
  for (std::size_t l = 0; l < a.layers.size(); ++l) {
    for (std::size_t g = 0; g < a.layers[l].gates.size(); ++g) {
      worst = std::max(worst, (a.layers[l].gates[g].matrix - b.layers[l].gates[g].matrix)
                                  .cwiseAbs()
                                  .maxCoeff());
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("bond caps follow the light cone of the staircase") {
  CHECK(amlet_bond_caps(8, 1) == std::vector<std::size_t>(7, 2));
  CHECK(amlet_bond_caps(8, 2) == std::vector<std::size_t>{2, 4, 4, 4, 4, 4, 2});
  CHECK(amlet_bond_caps(8, 9) == std::vector<std::size_t>{2, 4, 8, 16, 8, 4, 2});
  CHECK(amlet_saturation_depth(8) == 4);
  CHECK(amlet_saturation_depth(3) == 1);
}

TEST_CASE("GHZ states load exactly with one layer") {
  for (std::size_t n : {2, 4, 8, 12}) {
    const auto r = compile_amlet(named(ghz_state(n)), FixedDepth{1});
    CHECK(r.report.measured.eps_l2 <= 1e-8);
    validate_circuit(r.circuit);
  }
}

TEST_CASE("one layer prepares the same state as the layer-by-layer compiler") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DataVector d = named(random_vector(7, seed));
    const auto a = apply_circuit(compile_amlet(d, FixedDepth{1}).circuit);
    const auto l = apply_circuit(compile_lbl(d, FixedDepth{1}).circuit);
    CHECK(oracle::distance(a, l) <= 1e-10);
  }
}

TEST_CASE("the wavefront sweep equals layer-major disentangling") {
  const std::size_t n = 6;
  const std::size_t depth = 3;
  const DataVector d = named(random_vector(n, 5));
  const auto r = compile_amlet(d, FixedDepth{depth});

  const auto dec = vector_to_mps(std::vector<double>(d.values.begin(), d.values.end()),
                                 amlet_bond_caps(n, depth));
  auto state = mps_to_vector(dec.mps);
  for (double& x : state) x /= dec.mps.norm;
  Circuit expect;
  expect.num_qubits = n;
  for (std::size_t l = 0; l < depth; ++l) {
    Layer layer;
    for (std::size_t q = 0; q + 1 < n; ++q) {
      TwoQubitGate g = pair_disentangler(state, n, q);
      apply_gate_transpose(state, n, g);
      layer.gates.insert(layer.gates.begin(), g);
    }
    expect.layers.insert(expect.layers.begin(), layer);
  }
  Circuit got = r.circuit;
  if (oracle::distance(apply_circuit(got), apply_circuit(expect)) > 1.0) {
    negate_global_sign(expect);
  }
  CHECK(max_gate_difference(got, expect) <= 1e-10);
}

TEST_CASE("truncation happens once per cut, in the compression sweep") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DataVector d = named(random_vector(8, seed));
    const auto a = compile_amlet(d, FixedDepth{2});
    const auto l = compile_lbl(d, FixedDepth{2});
    CHECK(a.report.truncation_events.size() <= 7);
    REQUIRE_FALSE(l.report.truncation_events.empty());
    if (!a.report.truncation_events.empty()) {
      CHECK(a.report.truncation_events.front().svd_index >=
            l.report.truncation_events.front().svd_index);
    }
    for (const auto& e : a.report.truncation_events) CHECK(e.layer == 0);
    CHECK(a.report.max_canonical_deviation <= 1e-10);
  }
}

TEST_CASE("report fields") {
  const DataVector d = named(structured_profile("sine", 8));
  const auto r = compile_amlet(d, FixedDepth{4});
  CHECK(r.report.algorithm == Algorithm::Amlet);
  CHECK(r.report.depth == 4);
  CHECK(r.report.per_layer_discarded.size() == 4);
  for (std::size_t l = 1; l < 4; ++l) {
    CHECK(r.report.per_layer_discarded[l] <= r.report.per_layer_discarded[l - 1] + 1e-12);
  }
  const Metrics m = measure(d, r.circuit);
  CHECK(m.eps_l2 == doctest::Approx(r.report.measured.eps_l2).epsilon(1e-12));
}

TEST_CASE("beyond saturation deeper circuits extend shallower ones") {
  const std::size_t n = 6;
  const DataVector d = named(random_vector(n, 31));
  const auto a = compile_amlet(d, FixedDepth{3});
  const auto b = compile_amlet(d, FixedDepth{5});
  Circuit tail = b.circuit;
  tail.layers.erase(tail.layers.begin(), tail.layers.begin() + 2);
  Circuit head = a.circuit;
  if (oracle::distance(apply_circuit(head), apply_circuit(tail)) > 1.0) {
    negate_global_sign(head);
  }
  CHECK(max_gate_difference(head, tail) <= 1e-10);
}

TEST_CASE("threshold mode returns the smallest passing depth") {
  for (const char* name : {"gaussian", "piecewise_abs"}) {
    const DataVector d = named(structured_profile(name, 8));
    const double target = 1e-3 * d.norm;
    const auto r = find_min_depth(d, Algorithm::Amlet, MetricKind::L2, target, 128);
    CHECK(r.report.measured.eps_l2 <= target);
    REQUIRE(r.report.depth >= 1);
    if (r.report.depth > 1) {
      const auto shorter = compile_amlet(d, FixedDepth{r.report.depth - 1});
      CHECK(shorter.report.measured.eps_l2 > target);
    }
    const auto same = compile_amlet(d, FixedDepth{r.report.depth});
    CHECK(same.report.measured.eps_l2 == r.report.measured.eps_l2);
  }
}

TEST_CASE("momentum targets are honoured") {
  DataVector d = named(structured_profile("sine_mix", 6));
  d.metric = MetricKind::Momentum;
  const auto r = find_min_depth(d, Algorithm::Amlet, MetricKind::Momentum, 1e-3, 64);
  CHECK(r.report.measured.eps_momentum <= 1e-3);
}

TEST_CASE("depth cap raises with the best circuit attached") {
  const DataVector d = named(random_vector(8, 2));
  try {
    find_min_depth(d, Algorithm::Amlet, MetricKind::L2, 1e-12, 5);
    FAIL("expected the budget to be exceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.best().report.depth >= 1);
    CHECK(e.best().report.depth <= 5);
  }
}

TEST_CASE("disentangler gates are proper rotations") {
  const auto v = random_vector(5, 8);
  for (std::size_t q = 0; q < 4; ++q) {
    std::vector<double> sv;
    const TwoQubitGate g = pair_disentangler(v, 5, q, &sv);
    validate_gate(g, 5);
    CHECK(sv.size() == 4);
    for (std::size_t k = 1; k < 4; ++k) CHECK(sv[k - 1] >= sv[k]);
  }
  CHECK_THROWS_AS(pair_disentangler(v, 5, 4), InvalidArgument);
}

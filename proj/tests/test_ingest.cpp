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

#include <cmath>
#include <string>

#include "doctest.h"
#include "tnload/errors.hpp"
#include "tnload/ingest.hpp"

using namespace tnload;

namespace {

const std::string kFixtures = TNLOAD_FIXTURES;

}  // namespace

TEST_CASE("a 2x2 image fills 12 of 16 amplitudes, channel by channel") {
  const auto vs = load_image(kFixtures + "/tiny.ppm", 4);
  REQUIRE(vs.size() == 1);
  const DataVector& d = vs[0];
  const std::vector<double> expect = {1, 0, 0, 0.2,  0, 1, 0, 0.4,
                                      0, 0, 1, 0.6,  0, 0, 0, 0};
  REQUIRE(d.values.size() == 16);
  for (std::size_t i = 0; i < 16; ++i) CHECK(d.values[i] == doctest::Approx(expect[i]));
  CHECK(d.original_length == 12);
  CHECK(d.metric == MetricKind::L2);
}

TEST_CASE("image sizes are fitted to the register") {
  CHECK(fit_image_size(2, 2, 4) == std::array<std::size_t, 2>{2, 2});
  CHECK(fit_image_size(4, 4, 4) == std::array<std::size_t, 2>{2, 2});
  CHECK(fit_image_size(64, 64, 12) == std::array<std::size_t, 2>{36, 36});
  CHECK(fit_image_size(200, 100, 10) == std::array<std::size_t, 2>{26, 13});
  for (std::size_t n = 2; n <= 14; ++n) {
    const auto [w, h] = fit_image_size(37, 23, n);
    CHECK(3 * w * h <= (std::size_t{1} << n));
  }
  CHECK_THROWS_AS(fit_image_size(2, 2, 1), InvalidArgument);
}

TEST_CASE("area averaging and the inverse layout") {
  const RgbImage img = read_ppm(kFixtures + "/grid4.ppm");
  const DataVector d = image_to_vector(img, 4, "grid");
  const RgbImage small = downsample(img, 2, 2);
  for (std::size_t y = 0; y < 2; ++y) {
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t c = 0; c < 3; ++c) {
        const double mean = (img.at(2 * x, 2 * y, c) + img.at(2 * x + 1, 2 * y, c) +
                             img.at(2 * x, 2 * y + 1, c) + img.at(2 * x + 1, 2 * y + 1, c)) /
                            4.0;
        CHECK(small.at(x, y, c) == doctest::Approx(mean).epsilon(1e-14));
      }
    }
  }
  const RgbImage back = vector_to_image(d.values, 2, 2);
  CHECK(back.pixels == small.pixels);

  const RgbImage odd = downsample(img, 3, 2);
  double src = 0.0;
  double dst = 0.0;
  for (double v : img.pixels) src += v;
  for (double v : odd.pixels) dst += v;
  CHECK(dst / 6.0 == doctest::Approx(src / 16.0).epsilon(1e-12));
}

TEST_CASE("malformed images report byte offsets") {
  try {
    read_ppm(kFixtures + "/truncated.ppm");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == 16);
  }
  CHECK_THROWS_AS(parse_ppm("P3\n1 1\n255\n"), ParseError);
  CHECK_THROWS_AS(parse_ppm("P6\n0 1\n255\n"), ParseError);
  const RgbImage round = parse_ppm(encode_ppm(read_ppm(kFixtures + "/tiny.ppm")));
  CHECK(round.pixels == read_ppm(kFixtures + "/tiny.ppm").pixels);
}

TEST_CASE("time series are cut into padded windows") {
  const auto vs = load_timeseries(kFixtures + "/series.csv", "close, adj", 2,
                                  SeriesKind::Finance);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].values == std::vector<double>{1.5, 2.5, 3.5, 4.5});
  CHECK(vs[1].values == std::vector<double>{5.5, 6.5, 0.0, 0.0});
  CHECK(vs[1].original_length == 2);
  CHECK(vs[0].metric == MetricKind::L2);
  const auto fluid = load_timeseries(kFixtures + "/series.csv", "2", 3, SeriesKind::Fluid);
  REQUIRE(fluid.size() == 1);
  CHECK(fluid[0].metric == MetricKind::Momentum);
  CHECK(fluid[0].values[5] == 15.0);
  CHECK(fluid[0].values[6] == 0.0);
}

TEST_CASE("csv errors carry the row") {
  try {
    load_timeseries(kFixtures + "/bad_series.csv", "value", 2, SeriesKind::Finance);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == 3);
  }
  CHECK_THROWS_AS(series_windows("a,b\n1,2\n", "c", 2, SeriesKind::Finance, "x"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_csv("a,\"b\n"), ParseError);
  const auto rows = parse_csv("a,\"b \"\"q\"\"\"\r\n1,2\r\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][1] == "b \"q\"");
  CHECK(series_windows("a\n", "a", 2, SeriesKind::Finance, "x").empty());
}

TEST_CASE("pdb coordinates are windowed by atom") {
  const auto vs = load_pdb(kFixtures + "/tiny.pdb", 4);
  REQUIRE(vs.size() == 2);
  CHECK(*vs[0].atom_count == 5);
  CHECK(*vs[1].atom_count == 2);
  CHECK(vs[0].metric == MetricKind::Rmsd);
  CHECK(vs[0].values[0] == 1.0);
  CHECK(vs[0].values[1] == -2.5);
  CHECK(vs[0].values[2] == 10.25);
  CHECK(vs[0].values[9] == 4.0);
  CHECK(vs[1].values[0] == 6.0);
  CHECK(vs[1].values[1] == 0.0);
  CHECK(vs[1].values[2] == 5.25);
  CHECK(vs[1].values[6] == 0.0);
  CHECK(vs[1].original_length == 6);
  CHECK_THROWS_AS(load_pdb(kFixtures + "/empty.pdb", 4), InvalidArgument);
  CHECK_THROWS_AS(parse_pdb("ATOM      1  CA  ALA A   1       1.000\n"), ParseError);
}

TEST_CASE("vec files") {
  const auto vs = load_vec(kFixtures + "/tiny.vec", 0);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].num_qubits == 2);
  CHECK(vs[0].values == std::vector<double>{1, 2, 3, 0});
  CHECK(parse_vec(format_vec({0.1, -2.5e-300})) == std::vector<double>{0.1, -2.5e-300});
  CHECK_THROWS_AS(parse_vec("1\nx\n"), ParseError);
}

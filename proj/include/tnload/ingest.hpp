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

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tnload/data.hpp"

namespace tnload {

// Interleaved RGB samples in [0, 1], row-major.
struct RgbImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> pixels;

  double at(std::size_t x, std::size_t y, std::size_t channel) const {
    return pixels[(y * width + x) * 3 + channel];
  }
};

// Binary P6. Samples are divided by the declared maxval. ParseError locations
// are byte offsets.
RgbImage parse_ppm(std::string_view bytes);
RgbImage read_ppm(const std::filesystem::path& path);
std::string encode_ppm(const RgbImage& image);

// Largest size with 3 * w * h <= 2^num_qubits, scaled uniformly from the
// source and never larger than it.
std::array<std::size_t, 2> fit_image_size(std::size_t width, std::size_t height,
                                          std::size_t num_qubits);

// Area-average resampling.
RgbImage downsample(const RgbImage& image, std::size_t width,
                    std::size_t height);

// Layout: the red plane row-major, then green, then blue, then zero padding.
DataVector image_to_vector(const RgbImage& image, std::size_t num_qubits,
                           std::string provenance);
RgbImage vector_to_image(const std::vector<double>& values, std::size_t width,
                         std::size_t height);

std::vector<DataVector> load_image(const std::filesystem::path& path,
                                   std::size_t num_qubits);

enum class SeriesKind { Finance, Fluid };

// RFC 4180 rows. ParseError locations are 1-based record numbers.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Non-overlapping windows of 2^n samples of one column, the last one
// zero-padded. The column is matched by header name, or by zero-based index
// when no header cell matches.
std::vector<DataVector> series_windows(std::string_view csv_text,
                                       const std::string& column,
                                       std::size_t num_qubits, SeriesKind kind,
                                       const std::string& provenance);
std::vector<DataVector> load_timeseries(const std::filesystem::path& path,
                                        const std::string& column,
                                        std::size_t num_qubits,
                                        SeriesKind kind);

struct Atom {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// ATOM and HETATM records. ParseError locations are 1-based line numbers.
std::vector<Atom> parse_pdb(std::string_view text);

// floor(2^n / 3) atoms per window, coordinates flattened as x, y, z.
std::vector<DataVector> atom_windows(const std::vector<Atom>& atoms,
                                     std::size_t num_qubits,
                                     const std::string& provenance);
std::vector<DataVector> load_pdb(const std::filesystem::path& path,
                                 std::size_t num_qubits);

// One value per line; blank lines and '#' comments are skipped.
std::vector<double> parse_vec(std::string_view text);
std::vector<DataVector> load_vec(const std::filesystem::path& path,
                                 std::size_t num_qubits);
std::string format_vec(const std::vector<double>& values);

std::string read_file(const std::filesystem::path& path);

}  // namespace tnload

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

#include "tnload/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tnload/errors.hpp"

namespace tnload {

namespace {

std::string trim_copy(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parse_number(std::string_view text, double& out) {
  const std::string s = trim_copy(text);
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(out);
}

std::size_t register_length(std::size_t num_qubits) {
  if (num_qubits == 0 || num_qubits >= 8 * sizeof(std::size_t) - 1) {
    throw InvalidArgument("qubit count out of range");
  }
  return std::size_t{1} << num_qubits;
}

// weights[i][j] = overlap of output cell i with source cell j, in source units.
std::vector<std::vector<std::pair<std::size_t, double>>> area_weights(
    std::size_t src, std::size_t dst) {
  std::vector<std::vector<std::pair<std::size_t, double>>> w(dst);
  const double scale = static_cast<double>(src) / static_cast<double>(dst);
  for (std::size_t i = 0; i < dst; ++i) {
    const double lo = i * scale;
    const double hi = (i + 1) * scale;
    auto first = static_cast<std::size_t>(std::floor(lo));
    for (std::size_t j = first; j < src && static_cast<double>(j) < hi; ++j) {
      const double overlap =
          std::min(hi, static_cast<double>(j + 1)) - std::max(lo, static_cast<double>(j));
      if (overlap > 0.0) w[i].push_back({j, overlap / scale});
    }
  }
  return w;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RgbImage parse_ppm(std::string_view bytes) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    for (;;) {
      while (pos < bytes.size() &&
             std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      }
      if (pos < bytes.size() && bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        continue;
      }
      return;
    }
  };
  auto read_int = [&]() -> std::size_t {
    skip_space();
    const std::size_t begin = pos;
    std::size_t value = 0;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
      value = value * 10 + static_cast<std::size_t>(bytes[pos] - '0');
      if (value > (std::size_t{1} << 32)) throw ParseError("header value too large", begin);
      ++pos;
    }
    if (pos == begin) throw ParseError("expected an integer in PPM header", begin);
    return value;
  };

  if (bytes.size() < 2 || bytes.substr(0, 2) != "P6") {
    throw ParseError("not a binary PPM (P6) file", 0);
  }
  pos = 2;
  RgbImage img;
  img.width = read_int();
  img.height = read_int();
  const std::size_t maxval = read_int();
  if (img.width == 0 || img.height == 0) {
    throw ParseError("image has no pixels", pos);
  }
  if (maxval == 0 || maxval > 65535) throw ParseError("invalid maxval", pos);
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    throw ParseError("missing whitespace after header", pos);
  }
  ++pos;
  const std::size_t sample_bytes = maxval < 256 ? 1 : 2;
  const std::size_t count = img.width * img.height * 3;
  if (bytes.size() - pos < count * sample_bytes) {
    throw ParseError("pixel data is truncated", bytes.size());
  }
  img.pixels.resize(count);
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t v = data[i * sample_bytes];
    if (sample_bytes == 2) v = v * 256 + data[i * 2 + 1];
    if (v > maxval) throw ParseError("sample exceeds maxval", pos + i * sample_bytes);
    img.pixels[i] = static_cast<double>(v) / static_cast<double>(maxval);
  }
  return img;
}

RgbImage read_ppm(const std::filesystem::path& path) {
  return parse_ppm(read_file(path));
}

std::string encode_ppm(const RgbImage& image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " +
                    std::to_string(image.height) + "\n255\n";
  for (double v : image.pixels) {
    const double c = std::clamp(v, 0.0, 1.0);
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(c * 255.0))));
  }
  return out;
}

std::array<std::size_t, 2> fit_image_size(std::size_t width, std::size_t height,
                                          std::size_t num_qubits) {
  const std::size_t budget = register_length(num_qubits) / 3;
  if (budget == 0) throw InvalidArgument("register too small for an RGB pixel");
  if (width == 0 || height == 0) throw InvalidArgument("empty image");
  if (width * height <= budget) return {width, height};
  const double s = std::sqrt(static_cast<double>(budget) /
                             (static_cast<double>(width) * static_cast<double>(height)));
  std::size_t w = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(width * s + 1e-9)));
  std::size_t h = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(height * s + 1e-9)));
  while (w * h > budget) {
    if (w * height >= h * width && w > 1) {
      --w;
    } else {
      --h;
    }
  }
  return {w, h};
}

RgbImage downsample(const RgbImage& image, std::size_t width,
                    std::size_t height) {
  if (width == 0 || height == 0 || width > image.width || height > image.height) {
    throw InvalidArgument("downsample target must be within the source size");
  }
  if (width == image.width && height == image.height) return image;
  const auto wx = area_weights(image.width, width);
  const auto wy = area_weights(image.height, height);
  RgbImage out;
  out.width = width;
  out.height = height;
  out.pixels.assign(width * height * 3, 0.0);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      for (std::size_t c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (const auto& [sy, fy] : wy[y]) {
          for (const auto& [sx, fx] : wx[x]) acc += fy * fx * image.at(sx, sy, c);
        }
        out.pixels[(y * width + x) * 3 + c] = acc;
      }
    }
  }
  return out;
}

DataVector image_to_vector(const RgbImage& image, std::size_t num_qubits,
                           std::string provenance) {
  const auto [w, h] = fit_image_size(image.width, image.height, num_qubits);
  const RgbImage small = downsample(image, w, h);
  std::vector<double> values(3 * w * h);
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        values[c * w * h + y * w + x] = small.at(x, y, c);
      }
    }
  }
  return make_data_vector(std::move(values), num_qubits, MetricKind::L2,
                          std::move(provenance) + "#" + std::to_string(w) + "x" +
                              std::to_string(h));
}

RgbImage vector_to_image(const std::vector<double>& values, std::size_t width,
                         std::size_t height) {
  if (values.size() < 3 * width * height) {
    throw InvalidArgument("vector too short for the image size");
  }
  RgbImage img;
  img.width = width;
  img.height = height;
  img.pixels.resize(3 * width * height);
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        img.pixels[(y * width + x) * 3 + c] = values[c * width * height + y * width + x];
      }
    }
  }
  return img;
}

std::vector<DataVector> load_image(const std::filesystem::path& path,
                                   std::size_t num_qubits) {
  return {image_to_vector(read_ppm(path), num_qubits, path.string())};
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t record = 1;
  std::size_t i = 0;
  auto end_record = [&] {
    row.push_back(std::move(field));
    field.clear();
    if (!(row.size() == 1 && row[0].empty() && !field_started)) {
      rows.push_back(std::move(row));
    }
    row.clear();
    field_started = false;
    ++record;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          i += 2;
          continue;
        }
        in_quotes = false;
      } else {
        field.push_back(c);
      }
      ++i;
      continue;
    }
    if (c == '"') {
      if (!trim_copy(field).empty()) {
        throw ParseError("quote inside an unquoted field", record);
      }
      field.clear();
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      end_record();
      ++i;
    } else if (c == '\n') {
      end_record();
    } else {
      field.push_back(c);
      field_started = true;
    }
    ++i;
  }
  if (in_quotes) throw ParseError("unterminated quoted field", record);
  if (field_started || !field.empty() || !row.empty()) end_record();
  return rows;
}

std::vector<DataVector> series_windows(std::string_view csv_text,
                                       const std::string& column,
                                       std::size_t num_qubits, SeriesKind kind,
                                       const std::string& provenance) {
  const std::size_t window = register_length(num_qubits);
  const auto rows = parse_csv(csv_text);
  if (rows.empty()) throw ParseError("missing header row", 1);
  const auto& header = rows[0];
  std::size_t col = header.size();
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (trim_copy(header[j]) == column) {
      col = j;
      break;
    }
  }
  if (col == header.size()) {
    const std::string c = trim_copy(column);
    if (!c.empty() && c.find_first_not_of("0123456789") == std::string::npos &&
        std::stoul(c) < header.size()) {
      col = std::stoul(c);
    } else {
      throw InvalidArgument("column not found: " + column);
    }
  }
  std::vector<double> series;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (col >= rows[r].size()) throw ParseError("row is missing the column", r + 1);
    double value = 0.0;
    if (!parse_number(rows[r][col], value)) {
      throw ParseError("non-numeric cell '" + rows[r][col] + "'", r + 1);
    }
    series.push_back(value);
  }
  const MetricKind metric =
      kind == SeriesKind::Finance ? MetricKind::L2 : MetricKind::Momentum;
  std::vector<DataVector> out;
  for (std::size_t start = 0; start < series.size(); start += window) {
    const std::size_t stop = std::min(series.size(), start + window);
    std::vector<double> chunk(series.begin() + static_cast<std::ptrdiff_t>(start),
                              series.begin() + static_cast<std::ptrdiff_t>(stop));
    out.push_back(make_data_vector(std::move(chunk), num_qubits, metric,
                                   provenance + "#column=" + column +
                                       ",offset=" + std::to_string(start)));
  }
  return out;
}

std::vector<DataVector> load_timeseries(const std::filesystem::path& path,
                                        const std::string& column,
                                        std::size_t num_qubits,
                                        SeriesKind kind) {
  return series_windows(read_file(path), column, num_qubits, kind, path.string());
}

std::vector<Atom> parse_pdb(std::string_view text) {
  std::vector<Atom> atoms;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    ++line_no;
    const std::string_view record = line.substr(0, 6);
    if (record != "ATOM  " && record != "HETATM" && trim_copy(record) != "ATOM") {
      continue;
    }
    if (line.size() < 54) throw ParseError("coordinate columns are missing", line_no);
    Atom a;
    if (!parse_number(line.substr(30, 8), a.x) ||
        !parse_number(line.substr(38, 8), a.y) ||
        !parse_number(line.substr(46, 8), a.z)) {
      throw ParseError("malformed coordinates", line_no);
    }
    atoms.push_back(a);
  }
  return atoms;
}

std::vector<DataVector> atom_windows(const std::vector<Atom>& atoms,
                                     std::size_t num_qubits,
                                     const std::string& provenance) {
  const std::size_t per_window = register_length(num_qubits) / 3;
  if (per_window == 0) throw InvalidArgument("register too small for one atom");
  if (atoms.empty()) throw InvalidArgument("no atoms to encode");
  std::vector<DataVector> out;
  for (std::size_t first = 0; first < atoms.size(); first += per_window) {
    const std::size_t last = std::min(atoms.size(), first + per_window);
    std::vector<double> coords;
    for (std::size_t k = first; k < last; ++k) {
      coords.insert(coords.end(), {atoms[k].x, atoms[k].y, atoms[k].z});
    }
    DataVector d = make_data_vector(std::move(coords), num_qubits, MetricKind::Rmsd,
                                    provenance + "#atom=" + std::to_string(first));
    d.atom_count = last - first;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<DataVector> load_pdb(const std::filesystem::path& path,
                                 std::size_t num_qubits) {
  return atom_windows(parse_pdb(read_file(path)), num_qubits, path.string());
}

std::vector<double> parse_vec(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim_copy(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    double v = 0.0;
    if (!parse_number(line, v)) throw ParseError("expected one number per line", line_no);
    values.push_back(v);
  }
  return values;
}

std::vector<DataVector> load_vec(const std::filesystem::path& path,
                                 std::size_t num_qubits) {
  return {make_data_vector(parse_vec(read_file(path)), num_qubits, MetricKind::L2,
                           path.string())};
}

std::string format_vec(const std::vector<double>& values) {
  std::string out;
  char buf[64];
  for (double v : values) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    out += buf;
  }
  return out;
}

}  // namespace tnload

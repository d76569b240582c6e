// Copyright 2026 The opent Authors
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

#include "opent/matrix_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace opent {
namespace {

constexpr std::size_t kHeaderBytes = 24;
constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 32;

std::uint64_t load_u64_le(const char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(p[i]);
  }
  return v;
}

void store_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>(v & 0xffu));
    v >>= 8;
  }
}

double load_f64_le(const char* p) {
  return std::bit_cast<double>(load_u64_le(p));
}

void store_f64_le(std::string& out, double v) {
  store_u64_le(out, std::bit_cast<std::uint64_t>(v));
}

void check_dims(std::uint64_t rows, std::uint64_t cols, std::size_t offset) {
  if (rows == 0 || cols == 0) {
    throw MatrixFormatError("matrix dimensions must be positive", offset);
  }
  if (rows > kMaxEntries / cols) {
    throw MatrixFormatError("matrix dimensions too large", offset);
  }
}

ComplexMatrix parse_binary(std::string_view bytes) {
  if (bytes.size() < kHeaderBytes) {
    throw MatrixFormatError("truncated header", bytes.size());
  }
  const std::uint64_t rows = load_u64_le(bytes.data() + 8);
  const std::uint64_t cols = load_u64_le(bytes.data() + 16);
  check_dims(rows, cols, 8);
  const std::uint64_t need = kHeaderBytes + rows * cols * 16;
  if (bytes.size() < need) {
    throw MatrixFormatError("truncated payload: expected " +
                                std::to_string(need) + " bytes",
                            bytes.size());
  }
  if (bytes.size() > need) {
    throw MatrixFormatError("trailing bytes after payload", need);
  }
  ComplexMatrix m(rows, cols);
  const char* p = bytes.data() + kHeaderBytes;
  for (std::uint64_t i = 0; i < rows * cols; ++i, p += 16) {
    const double re = load_f64_le(p), im = load_f64_le(p + 8);
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw MatrixFormatError("non-finite entry",
                              static_cast<std::size_t>(p - bytes.data()));
    }
    m.data()[i] = {re, im};
  }
  return m;
}

ComplexMatrix parse_jsonl(std::string_view bytes) {
  using nlohmann::json;
  std::size_t pos = 0;
  auto next_line = [&](std::size_t& start) -> std::string_view {
    // Skip blank lines; `start` receives the byte offset of the line.
    while (pos < bytes.size()) {
      const std::size_t end = bytes.find('\n', pos);
      const std::size_t stop = end == std::string_view::npos ? bytes.size() : end;
      std::string_view line = bytes.substr(pos, stop - pos);
      start = pos;
      pos = stop + (end == std::string_view::npos ? 0 : 1);
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) return line;
    }
    start = bytes.size();
    return {};
  };
  auto parse_at = [](std::string_view line, std::size_t start) {
    try {
      return json::parse(line);
    } catch (const json::parse_error& e) {
      throw MatrixFormatError(std::string("invalid JSON: ") + e.what(),
                              start + (e.byte > 0 ? e.byte - 1 : 0));
    }
  };

  std::size_t start = 0;
  const std::string_view head = next_line(start);
  if (head.empty()) throw MatrixFormatError("empty matrix file", 0);
  const json header = parse_at(head, start);
  if (!header.is_object() || !header.contains("rows") ||
      !header.contains("cols") || !header["rows"].is_number_unsigned() ||
      !header["cols"].is_number_unsigned()) {
    throw MatrixFormatError("header must be {\"rows\": r, \"cols\": c}", start);
  }
  const auto rows = header["rows"].get<std::uint64_t>();
  const auto cols = header["cols"].get<std::uint64_t>();
  check_dims(rows, cols, start);

  ComplexMatrix m(rows, cols);
  for (std::uint64_t r = 0; r < rows; ++r) {
    const std::string_view line = next_line(start);
    if (line.empty()) {
      throw MatrixFormatError("missing row " + std::to_string(r), start);
    }
    const json row = parse_at(line, start);
    if (!row.is_array() || row.size() != cols) {
      throw MatrixFormatError("row " + std::to_string(r) + " must hold " +
                                  std::to_string(cols) + " entries",
                              start);
    }
    for (std::uint64_t c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw MatrixFormatError("entry (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ") must be [re, im]",
                                start);
      }
      m(r, c) = {e[0].get<double>(), e[1].get<double>()};
    }
  }
  const std::string_view extra = next_line(start);
  if (!extra.empty()) throw MatrixFormatError("unexpected trailing line", start);
  return m;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw ComputeError("short write to '" + path + "'");
}

}  // namespace

MatrixFormatError::MatrixFormatError(const std::string& what, std::size_t offset)
    : InputError(what + " (at byte offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

ComplexMatrix parse_matrix(std::string_view bytes) {
  if (bytes.size() >= 5 && bytes.substr(0, 5) == std::string_view("OPMAT", 5)) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kMatrixMagic, 8) != 0) {
      throw MatrixFormatError("unsupported binary matrix version", 5);
    }
    return parse_binary(bytes);
  }
  return parse_jsonl(bytes);
}

ComplexMatrix read_matrix(const std::string& path) {
  return parse_matrix(slurp(path));
}

std::string encode_matrix_binary(const ComplexMatrix& m) {
  std::string out(kMatrixMagic, 8);
  store_u64_le(out, static_cast<std::uint64_t>(m.rows()));
  store_u64_le(out, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    store_f64_le(out, m.data()[i].real());
    store_f64_le(out, m.data()[i].imag());
  }
  return out;
}

std::string encode_matrix_jsonl(const ComplexMatrix& m) {
  using nlohmann::json;
  std::string out = json{{"rows", m.rows()}, {"cols", m.cols()}}.dump();
  out.push_back('\n');
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    out += row.dump();
    out.push_back('\n');
  }
  return out;
}

void write_matrix_binary(const std::string& path, const ComplexMatrix& m) {
  spit(path, encode_matrix_binary(m));
}

void write_matrix_jsonl(const std::string& path, const ComplexMatrix& m) {
  spit(path, encode_matrix_jsonl(m));
}

}  // namespace opent

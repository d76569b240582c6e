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

#pragma once

// Output plumbing shared by the CLI commands: CSV with round-trip precision
// and the run manifest written next to every output file.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace opent::cli {

/// %.17g, the shortest fixed-width format that round-trips every double.
std::string format_double(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& cells);
  std::string str() const { return text_; }
  std::size_t rows() const { return rows_; }

 private:
  std::size_t columns_;
  std::size_t rows_ = 0;
  std::string text_;
};

void write_text_file(const std::string& path, const std::string& text);

class RunManifest {
 public:
  RunManifest(std::string command, std::uint64_t seed);
  nlohmann::json& parameters() { return params_; }
  void add_output(const std::string& path) { outputs_.push_back(path); }
  /// Writes <stem>.manifest.json into `dir` and returns its path.
  std::string write(const std::string& dir, const std::string& stem) const;

 private:
  std::string command_;
  std::uint64_t seed_;
  nlohmann::json params_ = nlohmann::json::object();
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

/// Creates `dir` (and parents) if needed; returns dir joined with name.
std::string output_path(const std::string& dir, const std::string& name);

}  // namespace opent::cli

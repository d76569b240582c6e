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

#include "run_support.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "opent/errors.hpp"
#include "opent/sampling.hpp"

namespace opent::cli {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  add_row(header);
  rows_ = 0;
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) {
    throw ComputeError("CSV row has the wrong number of cells");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_.push_back(',');
    text_ += cells[i];
  }
  text_.push_back('\n');
  ++rows_;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ComputeError("short write to '" + path + "'");
}

std::string output_path(const std::string& dir, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory '" + dir + "'");
  return (std::filesystem::path(dir) / name).string();
}

RunManifest::RunManifest(std::string command, std::uint64_t seed)
    : command_(std::move(command)),
      seed_(seed),
      start_(std::chrono::steady_clock::now()) {}

std::string RunManifest::write(const std::string& dir,
                               const std::string& stem) const {
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
  nlohmann::json j;
  j["command"] = command_;
  j["parameters"] = params_;
  j["seed"] = seed_;
  j["rng"] = SeededStream::kAlgorithm;
  j["tool_version"] = OPENT_VERSION;
  j["outputs"] = outputs_;
  j["wall_clock_seconds"] = secs;
  const std::string path = output_path(dir, stem + ".manifest.json");
  write_text_file(path, j.dump(2) + "\n");
  return path;
}

}  // namespace opent::cli

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

// Matrix files.
//
// Binary: the 8 bytes "OPMAT\x01\0\0", rows and cols as little-endian
// uint64, then rows*cols entries as little-endian (real, imag) doubles in
// row-major order.
//
// JSON lines: a header object {"rows": r, "cols": c} on the first line, then
// one line per row holding an array of [re, im] pairs.
//
// Readers detect the format from the first bytes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "opent/errors.hpp"
#include "opent/tensor.hpp"

namespace opent {

inline constexpr char kMatrixMagic[8] = {'O', 'P', 'M', 'A', 'T', '\x01', '\0', '\0'};

/// Malformed matrix data; `offset` is the byte position of the problem.
class MatrixFormatError : public InputError {
 public:
  MatrixFormatError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

ComplexMatrix parse_matrix(std::string_view bytes);
ComplexMatrix read_matrix(const std::string& path);

std::string encode_matrix_binary(const ComplexMatrix& m);
std::string encode_matrix_jsonl(const ComplexMatrix& m);
void write_matrix_binary(const std::string& path, const ComplexMatrix& m);
void write_matrix_jsonl(const std::string& path, const ComplexMatrix& m);

}  // namespace opent

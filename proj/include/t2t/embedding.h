// Copyright 2026 The t2t Authors
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

#ifndef T2T_EMBEDDING_H_
#define T2T_EMBEDDING_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace t2t {

// Dense row-major rows x cols float matrix; row i embeds token id i.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t rows, std::size_t cols);
  EmbeddingMatrix(std::size_t rows, std::size_t cols, std::vector<float> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<float> row(std::size_t i);
  std::span<const float> row(std::size_t i) const;

  const std::vector<float>& data() const { return data_; }

  bool operator==(const EmbeddingMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<float> data_;
};

// Binary layout, all little-endian:
//   "EMB1" | rows:u32 | cols:u32 | rows*cols float32, row-major.
void write_matrix(const EmbeddingMatrix& m, std::ostream& out);
void write_matrix(const EmbeddingMatrix& m, const std::filesystem::path& path);
// Throws kFormatError (bad magic, trailing bytes, non-finite entry) or
// kTruncatedError.
EmbeddingMatrix read_matrix(std::istream& in);
EmbeddingMatrix read_matrix(const std::filesystem::path& path);

}  // namespace t2t

#endif  // T2T_EMBEDDING_H_

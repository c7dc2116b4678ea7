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

#include "t2t/embedding.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>

#include "t2t/error.h"

namespace t2t {

namespace {

constexpr std::array<char, 4> kMagic = {'E', 'M', 'B', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff),
                         static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff),
                         static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t get_u32(const unsigned char* b) {
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void read_exact(std::istream& in, unsigned char* dst, std::size_t n,
                const char* what) {
  in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw Error(ErrorCode::kTruncatedError, std::string("while reading ") + what);
  }
}

}  // namespace

EmbeddingMatrix::EmbeddingMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0f) {}

EmbeddingMatrix::EmbeddingMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<float> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::kShapeError,
                std::to_string(data_.size()) + " values for " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
}

std::span<float> EmbeddingMatrix::row(std::size_t i) {
  return {data_.data() + i * cols_, cols_};
}

std::span<const float> EmbeddingMatrix::row(std::size_t i) const {
  return {data_.data() + i * cols_, cols_};
}

void write_matrix(const EmbeddingMatrix& m, std::ostream& out) {
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (m.rows() > kMax || m.cols() > kMax) {
    throw Error(ErrorCode::kShapeError, "dimension exceeds 32 bits");
  }
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, static_cast<std::uint32_t>(m.rows()));
  put_u32(out, static_cast<std::uint32_t>(m.cols()));
  for (const float f : m.data()) put_u32(out, std::bit_cast<std::uint32_t>(f));
  if (!out) throw Error(ErrorCode::kIoError, "write failed");
}

void write_matrix(const EmbeddingMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  write_matrix(m, out);
}

EmbeddingMatrix read_matrix(std::istream& in) {
  unsigned char header[12];
  in.read(reinterpret_cast<char*>(header), 4);
  if (in.gcount() == 4 && std::memcmp(header, kMagic.data(), 4) != 0) {
    throw Error(ErrorCode::kFormatError, "bad magic");
  }
  if (in.gcount() != 4) throw Error(ErrorCode::kTruncatedError, "header");
  read_exact(in, header + 4, 8, "header");
  const std::size_t rows = get_u32(header + 4);
  const std::size_t cols = get_u32(header + 8);

  // The header is untrusted: grow with the data actually present.
  std::vector<float> data;
  data.reserve(std::min<std::size_t>(rows * cols, std::size_t{1} << 24));
  std::vector<unsigned char> buf(cols * 4);
  for (std::size_t r = 0; r < rows; ++r) {
    read_exact(in, buf.data(), buf.size(), "matrix data");
    for (std::size_t c = 0; c < cols; ++c) {
      const float f = std::bit_cast<float>(get_u32(buf.data() + 4 * c));
      if (!std::isfinite(f)) {
        throw Error(ErrorCode::kFormatError,
                    "non-finite value at row " + std::to_string(r));
      }
      data.push_back(f);
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::kFormatError, "trailing bytes after matrix data");
  }
  return EmbeddingMatrix(rows, cols, std::move(data));
}

EmbeddingMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return read_matrix(in);
}

}  // namespace t2t

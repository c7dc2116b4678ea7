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

#ifndef T2T_TRANSFER_H_
#define T2T_TRANSFER_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "t2t/embedding.h"
#include "t2t/vocab.h"

namespace t2t {

enum class Provenance { kCopied, kAveraged, kFallback };

std::string_view provenance_name(Provenance p);

struct TransferReport {
  std::size_t copied = 0;
  std::size_t averaged = 0;
  std::size_t fallback = 0;
  // Indexed by target id.
  std::vector<Provenance> provenance;
  // Source rows that produced each target row.
  std::vector<TokenIds> source_ids;
};

struct TransferResult {
  EmbeddingMatrix embeddings;
  TransferReport report;
};

// Builds an embedding matrix for `tgt` from a matrix trained for `src`.
//
// A target piece spelled identically in `src` copies that row. Any other
// piece is segmented by the source tokenizer (raw piece text, no
// normalization) and gets the mean of its sub-piece rows; a lone boundary
// marker sub-piece is left out of the mean unless it is the only one. When
// the segmentation is all UNK, or the piece is a special token missing from
// `src`, the source UNK row is copied.
//
// Throws kEmptyVocab, kShapeError.
TransferResult transfer_embeddings(const Vocab& src,
                                   const EmbeddingMatrix& src_emb,
                                   const Vocab& tgt);

}  // namespace t2t

#endif  // T2T_TRANSFER_H_

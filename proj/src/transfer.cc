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

#include "t2t/transfer.h"

#include <algorithm>

#include "t2t/error.h"
#include "t2t/text.h"
#include "t2t/tokenizer.h"

namespace t2t {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kCopied: return "copied";
    case Provenance::kAveraged: return "averaged";
    case Provenance::kFallback: return "fallback";
  }
  return "unknown";
}

TransferResult transfer_embeddings(const Vocab& src,
                                   const EmbeddingMatrix& src_emb,
                                   const Vocab& tgt) {
  if (src.size() == 0 || src_emb.rows() == 0) {
    throw Error(ErrorCode::kEmptyVocab, "source vocabulary is empty");
  }
  if (src_emb.rows() != src.size()) {
    throw Error(ErrorCode::kShapeError,
                "source matrix has " + std::to_string(src_emb.rows()) +
                    " rows, vocabulary has " + std::to_string(src.size()));
  }

  const std::size_t dim = src_emb.cols();
  TransferResult result{EmbeddingMatrix(tgt.size(), dim), {}};
  TransferReport& report = result.report;
  report.provenance.reserve(tgt.size());
  report.source_ids.reserve(tgt.size());

  std::vector<double> acc(dim);
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    const std::string& piece = tgt.piece(static_cast<TokenId>(t));
    std::span<float> out = result.embeddings.row(t);

    if (const auto id = src.find(piece)) {
      const auto in = src_emb.row(static_cast<std::size_t>(*id));
      std::copy(in.begin(), in.end(), out.begin());
      report.provenance.push_back(Provenance::kCopied);
      report.source_ids.push_back({*id});
      ++report.copied;
      continue;
    }

    // Reserved spellings are not text; their characters mean nothing.
    const bool reserved = tgt.kind(static_cast<TokenId>(t)) != PieceKind::kNormal;
    const Segmentation seg =
        reserved ? Segmentation{} : segment(src, piece);
    const bool all_unk =
        std::all_of(seg.ids.begin(), seg.ids.end(),
                    [&](TokenId id) { return id == src.unk_id(); });
    if (all_unk) {
      const auto in = src_emb.row(static_cast<std::size_t>(src.unk_id()));
      std::copy(in.begin(), in.end(), out.begin());
      report.provenance.push_back(Provenance::kFallback);
      report.source_ids.push_back({src.unk_id()});
      ++report.fallback;
      continue;
    }

    TokenIds parts;
    for (std::size_t k = 0; k < seg.ids.size(); ++k) {
      if (seg.pieces[k] != kWordBoundary) parts.push_back(seg.ids[k]);
    }
    if (parts.empty()) parts = seg.ids;

    std::fill(acc.begin(), acc.end(), 0.0);
    for (const TokenId id : parts) {
      const auto in = src_emb.row(static_cast<std::size_t>(id));
      for (std::size_t c = 0; c < dim; ++c) acc[c] += in[c];
    }
    const double count = static_cast<double>(parts.size());
    for (std::size_t c = 0; c < dim; ++c) {
      out[c] = static_cast<float>(acc[c] / count);
    }
    report.provenance.push_back(Provenance::kAveraged);
    report.source_ids.push_back(std::move(parts));
    ++report.averaged;
  }
  return result;
}

}  // namespace t2t

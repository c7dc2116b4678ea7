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

#include "t2t/tokenizer.h"

#include <limits>

#include "t2t/error.h"
#include "t2t/text.h"

namespace t2t {

namespace {

struct Node {
  double score = -std::numeric_limits<double>::infinity();
  std::size_t prev = 0;  // codepoint index where the last piece starts
  TokenId id = -1;
};

}  // namespace

double unk_score(const Vocab& vocab) { return vocab.min_score() - kUnkPenalty; }

Segmentation segment(const Vocab& vocab, std::string_view text) {
  Segmentation result;
  if (text.empty()) return result;

  const std::vector<std::size_t> offsets = codepoint_boundaries(text);
  const std::size_t n = offsets.size() - 1;
  const double unk = unk_score(vocab);
  const std::size_t max_bytes = vocab.max_piece_bytes();

  // best[j]: best path covering codepoints [0, j).
  std::vector<Node> best(n + 1);
  best[0].score = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double base = best[i].score;
    bool single_char_known = false;
    for (std::size_t j = i + 1;
         j <= n && offsets[j] - offsets[i] <= max_bytes; ++j) {
      const auto id =
          vocab.find(text.substr(offsets[i], offsets[j] - offsets[i]));
      if (!id || vocab.kind(*id) != PieceKind::kNormal) continue;
      if (j == i + 1) single_char_known = true;
      const double candidate = base + vocab.score(*id);
      if (candidate > best[j].score) best[j] = {candidate, i, *id};
    }
    if (!single_char_known) {
      const double candidate = base + unk;
      if (candidate > best[i + 1].score) {
        best[i + 1] = {candidate, i, vocab.unk_id()};
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> spans;  // codepoint [b, e)
  std::vector<TokenId> ids;
  for (std::size_t j = n; j > 0; j = best[j].prev) {
    spans.emplace_back(best[j].prev, j);
    ids.push_back(best[j].id);
  }

  const TokenId unk_id = vocab.unk_id();
  for (std::size_t k = spans.size(); k-- > 0;) {
    const auto [b, e] = spans[k];
    const std::string_view surface =
        text.substr(offsets[b], offsets[e] - offsets[b]);
    if (ids[k] == unk_id && !result.ids.empty() &&
        result.ids.back() == unk_id) {
      result.pieces.back().append(surface);
      continue;
    }
    result.pieces.emplace_back(surface);
    result.ids.push_back(ids[k]);
  }
  result.total_score = best[n].score;
  return result;
}

Segmentation tokenize(const Vocab& vocab, std::string_view text) {
  return segment(vocab, add_whitespace_markers(normalize(text)));
}

TokenIds encode(const Vocab& vocab, std::string_view text) {
  return tokenize(vocab, text).ids;
}

std::string decode(const Vocab& vocab, std::span<const TokenId> ids) {
  std::string joined;
  for (const TokenId id : ids) {
    const PieceKind kind = vocab.kind(id);
    if (kind == PieceKind::kNormal || kind == PieceKind::kSentinel) {
      joined.append(vocab.piece(id));
    }
  }
  std::string out;
  out.reserve(joined.size());
  std::size_t pos = 0;
  while (pos < joined.size()) {
    if (joined.compare(pos, kWordBoundary.size(), kWordBoundary) == 0) {
      if (!out.empty()) out.push_back(' ');
      pos += kWordBoundary.size();
    } else {
      out.push_back(joined[pos++]);
    }
  }
  return out;
}

}  // namespace t2t

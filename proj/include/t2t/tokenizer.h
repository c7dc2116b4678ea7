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

#ifndef T2T_TOKENIZER_H_
#define T2T_TOKENIZER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "t2t/vocab.h"

namespace t2t {

// Score of one unknown character: min_score() - kUnkPenalty.
inline constexpr double kUnkPenalty = 10.0;

struct Segmentation {
  // Surface text of each piece. A run of consecutive unknown characters is
  // merged into a single UNK piece that keeps its surface.
  std::vector<std::string> pieces;
  TokenIds ids;
  // Sum of piece scores; every unknown character contributes one unk score.
  double total_score = 0.0;
};

double unk_score(const Vocab& vocab);

// Maximum-score segmentation of `text` exactly as given (no normalization,
// no boundary markers) into normal pieces of `vocab`.
Segmentation segment(const Vocab& vocab, std::string_view text);

// normalize -> add_whitespace_markers -> segment.
Segmentation tokenize(const Vocab& vocab, std::string_view text);
TokenIds encode(const Vocab& vocab, std::string_view text);

// Concatenates pieces, turns boundary markers back into spaces and drops the
// leading one. PAD, EOS, UNK and control pieces are dropped; sentinels are
// rendered with their spelling. Throws kInvalidId.
std::string decode(const Vocab& vocab, std::span<const TokenId> ids);

}  // namespace t2t

#endif  // T2T_TOKENIZER_H_

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

#ifndef T2T_VOCAB_H_
#define T2T_VOCAB_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace t2t {

using TokenId = std::int32_t;
using TokenIds = std::vector<TokenId>;

enum class PieceKind { kNormal, kPad, kEos, kUnk, kSentinel, kControl };

struct SpecialToken {
  std::string piece;
  TokenId id;
  PieceKind kind;
};

// Ordered list of unigram pieces; the id of a piece is its position.
//
// Reserved spellings: "<pad>", "</s>", "<unk>", "<extra_id_K>" (sentinel K),
// and the control pieces "<s>", "<2en>", "<2pl>", "[SEP]". Sentinels occupy
// the highest ids in descending order: sentinel 0 has id size() - 1.
// Only normal pieces take part in segmentation.
class Vocab {
 public:
  struct Entry {
    std::string piece;
    double score;
  };

  // Validates uniqueness, specials and the sentinel layout.
  explicit Vocab(std::vector<Entry> entries);

  std::size_t size() const { return entries_.size(); }

  const std::string& piece(TokenId id) const;
  double score(TokenId id) const;
  PieceKind kind(TokenId id) const;
  bool contains(TokenId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < entries_.size();
  }
  std::optional<TokenId> find(std::string_view piece) const;

  TokenId pad_id() const { return pad_id_; }
  TokenId eos_id() const { return eos_id_; }
  TokenId unk_id() const { return unk_id_; }

  std::size_t num_sentinels() const { return num_sentinels_; }
  // Requires k < num_sentinels().
  TokenId sentinel_id(std::size_t k) const;
  bool is_sentinel(TokenId id) const { return kind(id) == PieceKind::kSentinel; }

  std::vector<SpecialToken> special_tokens() const;

  // Lowest score among normal pieces (0 when there are none).
  double min_score() const { return min_score_; }
  std::size_t max_piece_bytes() const { return max_piece_bytes_; }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::vector<PieceKind> kinds_;
  std::map<std::string, TokenId, std::less<>> index_;
  TokenId pad_id_ = -1;
  TokenId eos_id_ = -1;
  TokenId unk_id_ = -1;
  std::size_t num_sentinels_ = 0;
  double min_score_ = 0.0;
  std::size_t max_piece_bytes_ = 0;
};

// "piece<TAB>score" per line; line index is the token id.
Vocab parse_vocab(std::istream& in);
Vocab load_vocab(const std::filesystem::path& path);

// Serializes in the file format accepted by parse_vocab.
std::string format_vocab(const Vocab& vocab);

}  // namespace t2t

#endif  // T2T_VOCAB_H_

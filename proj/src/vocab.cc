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

#include "t2t/vocab.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "t2t/error.h"

namespace t2t {

namespace {

constexpr std::string_view kSentinelPrefix = "<extra_id_";

std::optional<std::size_t> sentinel_index(std::string_view piece) {
  if (!piece.starts_with(kSentinelPrefix) || !piece.ends_with(">")) {
    return std::nullopt;
  }
  const std::string_view digits = piece.substr(
      kSentinelPrefix.size(), piece.size() - kSentinelPrefix.size() - 1);
  if (digits.empty() || (digits.size() > 1 && digits[0] == '0')) {
    return std::nullopt;
  }
  std::size_t k = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return k;
}

PieceKind classify(std::string_view piece) {
  if (piece == "<pad>") return PieceKind::kPad;
  if (piece == "</s>") return PieceKind::kEos;
  if (piece == "<unk>") return PieceKind::kUnk;
  if (sentinel_index(piece)) return PieceKind::kSentinel;
  if (piece == "<s>" || piece == "<2en>" || piece == "<2pl>" ||
      piece == "[SEP]") {
    return PieceKind::kControl;
  }
  return PieceKind::kNormal;
}

}  // namespace

Vocab::Vocab(std::vector<Entry> entries) : entries_(std::move(entries)) {
  kinds_.reserve(entries_.size());
  bool have_normal = false;
  std::vector<std::pair<std::size_t, TokenId>> sentinels;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    const auto id = static_cast<TokenId>(i);
    if (e.piece.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "empty piece at id " + std::to_string(i));
    }
    if (!index_.emplace(e.piece, id).second) {
      throw Error(ErrorCode::kDuplicatePiece,
                  "'" + e.piece + "' at id " + std::to_string(i));
    }
    const PieceKind kind = classify(e.piece);
    kinds_.push_back(kind);
    switch (kind) {
      case PieceKind::kPad: pad_id_ = id; break;
      case PieceKind::kEos: eos_id_ = id; break;
      case PieceKind::kUnk: unk_id_ = id; break;
      case PieceKind::kSentinel:
        sentinels.emplace_back(*sentinel_index(e.piece), id);
        break;
      case PieceKind::kControl: break;
      case PieceKind::kNormal:
        min_score_ = have_normal ? std::min(min_score_, e.score) : e.score;
        have_normal = true;
        max_piece_bytes_ = std::max(max_piece_bytes_, e.piece.size());
        break;
    }
  }
  std::string missing;
  if (pad_id_ < 0) missing += " <pad>";
  if (eos_id_ < 0) missing += " </s>";
  if (unk_id_ < 0) missing += " <unk>";
  if (!missing.empty()) {
    throw Error(ErrorCode::kMissingSpecial, "missing" + missing);
  }

  num_sentinels_ = sentinels.size();
  const auto top = static_cast<TokenId>(entries_.size()) - 1;
  for (const auto& [k, id] : sentinels) {
    if (k >= num_sentinels_ || id != top - static_cast<TokenId>(k)) {
      throw Error(ErrorCode::kSentinelLayout,
                  "<extra_id_" + std::to_string(k) + "> has id " +
                      std::to_string(id) + ", expected " +
                      std::to_string(top - static_cast<TokenId>(k)));
    }
  }
}

const std::string& Vocab::piece(TokenId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::kInvalidId, std::to_string(id));
  }
  return entries_[static_cast<std::size_t>(id)].piece;
}

double Vocab::score(TokenId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::kInvalidId, std::to_string(id));
  }
  return entries_[static_cast<std::size_t>(id)].score;
}

PieceKind Vocab::kind(TokenId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::kInvalidId, std::to_string(id));
  }
  return kinds_[static_cast<std::size_t>(id)];
}

std::optional<TokenId> Vocab::find(std::string_view piece) const {
  const auto it = index_.find(piece);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocab::sentinel_id(std::size_t k) const {
  if (k >= num_sentinels_) {
    throw Error(ErrorCode::kInsufficientSentinels,
                "sentinel " + std::to_string(k) + " requested, vocab has " +
                    std::to_string(num_sentinels_));
  }
  return static_cast<TokenId>(entries_.size() - 1 - k);
}

std::vector<SpecialToken> Vocab::special_tokens() const {
  std::vector<SpecialToken> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (kinds_[i] != PieceKind::kNormal) {
      out.push_back({entries_[i].piece, static_cast<TokenId>(i), kinds_[i]});
    }
  }
  return out;
}

Vocab parse_vocab(std::istream& in) {
  std::vector<Vocab::Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(line_no, "expected piece<TAB>score");
    }
    if (tab == 0) throw ParseError(line_no, "empty piece");
    const std::string_view score_text = std::string_view(line).substr(tab + 1);
    double score = 0.0;
    const auto [ptr, ec] = std::from_chars(
        score_text.data(), score_text.data() + score_text.size(), score);
    if (score_text.empty() || ec != std::errc() ||
        ptr != score_text.data() + score_text.size() || !std::isfinite(score)) {
      throw ParseError(line_no, "bad score '" + std::string(score_text) + "'");
    }
    std::string piece = line.substr(0, tab);
    if (score > 0.0 && classify(piece) == PieceKind::kNormal) {
      throw ParseError(line_no, "positive log-probability for '" + piece + "'");
    }
    entries.push_back({std::move(piece), score});
  }
  return Vocab(std::move(entries));
}

Vocab load_vocab(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  return parse_vocab(in);
}

std::string format_vocab(const Vocab& vocab) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& e : vocab.entries()) {
    os << e.piece << '\t' << e.score << '\n';
  }
  return os.str();
}

}  // namespace t2t

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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "t2t/error.h"
#include "t2t/rng.h"
#include "t2t/text.h"
#include "test_util.h"

namespace t2t {
namespace {

using testing::make_vocab;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no t2t::Error thrown";
  return ErrorCode::kInvalidArgument;
}

Vocab parse(const std::string& text) {
  std::istringstream in(text);
  return parse_vocab(in);
}

TEST(VocabTest, MinimalFile) {
  const Vocab v = parse("<pad>\t0\n</s>\t0\n<unk>\t0\n");
  EXPECT_EQ(3u, v.size());
  EXPECT_EQ(0, v.pad_id());
  EXPECT_EQ(1, v.eos_id());
  EXPECT_EQ(2, v.unk_id());
  EXPECT_EQ(0u, v.num_sentinels());
}

TEST(VocabTest, DuplicatePiece) {
  EXPECT_EQ(ErrorCode::kDuplicatePiece,
            code_of([] { parse("<pad>\t0\n</s>\t0\n<unk>\t0\n<pad>\t0\n"); }));
}

TEST(VocabTest, MissingSpecial) {
  EXPECT_EQ(ErrorCode::kMissingSpecial,
            code_of([] { parse("<pad>\t0\n</s>\t0\na\t-1\n"); }));
}

TEST(VocabTest, ParseErrorCarriesLine) {
  for (const std::string bad : {"a -1\n", "\t-1\n", "a\tx\n", "a\tnan\n",
                                "a\t-1x\n", "a\t0.5\n"}) {
    try {
      parse("<pad>\t0\n</s>\t0\n" + bad + "<unk>\t0\n");
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const ParseError& e) {
      EXPECT_EQ(3u, e.line()) << bad;
      EXPECT_EQ(ErrorCode::kParseError, e.code());
    }
  }
}

TEST(VocabTest, CrlfAccepted) {
  const Vocab v = parse("<pad>\t0\r\n</s>\t0\r\n<unk>\t0\r\nab\t-1.5\r\n");
  EXPECT_EQ(4u, v.size());
  EXPECT_EQ(3, *v.find("ab"));
  EXPECT_DOUBLE_EQ(-1.5, v.score(3));
}

TEST(VocabTest, SentinelLayout) {
  const Vocab v = make_vocab({{"a", -1}}, 3);
  EXPECT_EQ(3u, v.num_sentinels());
  EXPECT_EQ(static_cast<TokenId>(v.size() - 1), v.sentinel_id(0));
  EXPECT_EQ(static_cast<TokenId>(v.size() - 3), v.sentinel_id(2));
  EXPECT_TRUE(v.is_sentinel(v.sentinel_id(1)));
  EXPECT_EQ(ErrorCode::kInsufficientSentinels,
            code_of([&] { v.sentinel_id(3); }));
  // sentinel 0 must sit at the top id
  EXPECT_EQ(ErrorCode::kSentinelLayout, code_of([] {
              parse("<pad>\t0\n</s>\t0\n<unk>\t0\n<extra_id_0>\t0\na\t-1\n");
            }));
  EXPECT_EQ(ErrorCode::kSentinelLayout, code_of([] {
              parse("<pad>\t0\n</s>\t0\n<unk>\t0\n<extra_id_0>\t0\n"
                    "<extra_id_1>\t0\n");
            }));
}

TEST(VocabTest, FiftyThousandLines) {
  const auto path =
      std::filesystem::temp_directory_path() / "t2t_vocab_50k.tsv";
  {
    std::ofstream out(path);
    out << "<pad>\t0\n</s>\t0\n<unk>\t0\n";
    for (int i = 3; i < 49900; ++i) out << "p" << i << "\t-" << i << ".25\n";
    for (int k = 99; k >= 0; --k) out << "<extra_id_" << k << ">\t0\n";
  }
  const Vocab v = load_vocab(path);
  EXPECT_EQ(50000u, v.size());
  EXPECT_EQ(100u, v.num_sentinels());
  EXPECT_EQ(49999, v.sentinel_id(0));
  std::filesystem::remove(path);
}

TEST(VocabTest, FormatRoundTrip) {
  const Vocab v = make_vocab({{"\xE2\x96\x81kot", -2.5}, {"a", -0.125}}, 2);
  const Vocab w = parse(format_vocab(v));
  ASSERT_EQ(v.size(), w.size());
  for (TokenId i = 0; i < static_cast<TokenId>(v.size()); ++i) {
    EXPECT_EQ(v.piece(i), w.piece(i));
    EXPECT_EQ(v.score(i), w.score(i));
  }
}

TEST(VocabTest, LoadMissingFile) {
  EXPECT_EQ(ErrorCode::kIoError,
            code_of([] { load_vocab("/nonexistent/t2t/vocab.tsv"); }));
}

TEST(SegmentTest, LongerPieceWins) {
  const Vocab v = make_vocab({{"ab", -1.0}, {"a", -2.0}, {"b", -2.0}});
  const Segmentation s = segment(v, "ab");
  EXPECT_EQ(std::vector<std::string>{"ab"}, s.pieces);
  EXPECT_DOUBLE_EQ(-1.0, s.total_score);
}

TEST(EncodeTest, Empty) {
  const Vocab v = make_vocab({{"a", -1.0}});
  EXPECT_TRUE(encode(v, "").empty());
  EXPECT_TRUE(encode(v, "   ").empty());
}

TEST(EncodeTest, MarkerPrefixedPieces) {
  const Vocab v = make_vocab({{"\xE2\x96\x81" "ab", -1.0},
                              {"\xE2\x96\x81", -3.0},
                              {"a", -2.0},
                              {"b", -2.0}});
  const Segmentation s = tokenize(v, "ab");
  EXPECT_EQ(std::vector<std::string>{"\xE2\x96\x81" "ab"}, s.pieces);
  EXPECT_EQ(TokenIds{3}, s.ids);
}

TEST(EncodeTest, UnknownCharacter) {
  const Vocab v = make_vocab({{"\xE2\x96\x81", -1.0}, {"a", -1.0}});
  const TokenIds ids = encode(v, "q");
  EXPECT_EQ((TokenIds{3, v.unk_id()}), ids);
  // runs of unknown characters collapse
  const Segmentation s = tokenize(v, "qqa");
  EXPECT_EQ((std::vector<std::string>{"\xE2\x96\x81", "qq", "a"}), s.pieces);
  EXPECT_DOUBLE_EQ(-1.0 + 2 * unk_score(v) - 1.0, s.total_score);
}

TEST(EncodeTest, NormalizesFirst) {
  const Vocab v = make_vocab({{"\xE2\x96\x81", -1.0}, {"a", -1.0}, {"1", -1}});
  // fullwidth 'a' and a superscript one fold under NFKC
  EXPECT_EQ(encode(v, "a 1"), encode(v, "\xEF\xBD\x81\t \xC2\xB9"));
}

TEST(DecodeTest, RoundTrip) {
  const Vocab v = make_vocab({{"\xE2\x96\x81", -2.0},
                              {"\xE2\x96\x81kot", -1.0},
                              {"k", -3},
                              {"o", -3},
                              {"t", -3}});
  EXPECT_EQ("kot", decode(v, encode(v, "kot")));
  EXPECT_EQ("kot tok", decode(v, encode(v, "  kot   tok ")));
}

TEST(DecodeTest, SpecialsDroppedSentinelsKept) {
  const Vocab v = make_vocab({{"\xE2\x96\x81" "a", -1.0}, {"<2en>", 0}}, 2);
  EXPECT_EQ("", decode(v, TokenIds{v.pad_id(), v.eos_id()}));
  EXPECT_EQ("", decode(v, TokenIds{v.unk_id(), *v.find("<2en>")}));
  const std::string out =
      decode(v, TokenIds{3, v.sentinel_id(0), 3, v.eos_id()});
  EXPECT_NE(std::string::npos, out.find("<extra_id_0>"));
  EXPECT_EQ("a<extra_id_0> a", out);
}

TEST(DecodeTest, InvalidId) {
  const Vocab v = make_vocab({});
  EXPECT_EQ(ErrorCode::kInvalidId, code_of([&] { decode(v, TokenIds{3}); }));
  EXPECT_EQ(ErrorCode::kInvalidId, code_of([&] { decode(v, TokenIds{-1}); }));
}

// Every path through the lattice, listed explicitly. A character with no
// single-character piece may also be taken as one unknown.
void enumerate_paths(const Vocab& v, const std::vector<std::string>& chars,
                     std::size_t pos, double acc, double unk,
                     std::vector<double>& out) {
  if (pos == chars.size()) {
    out.push_back(acc);
    return;
  }
  std::string piece;
  for (std::size_t end = pos; end < chars.size(); ++end) {
    piece += chars[end];
    const auto id = v.find(piece);
    if (id && v.kind(*id) == PieceKind::kNormal) {
      enumerate_paths(v, chars, end + 1, acc + v.score(*id), unk, out);
    }
  }
  const auto single = v.find(chars[pos]);
  if (!single || v.kind(*single) != PieceKind::kNormal) {
    enumerate_paths(v, chars, pos + 1, acc + unk, unk, out);
  }
}

TEST(SegmentTest, MatchesBruteForce) {
  Rng rng(2024);
  const std::vector<std::string> alphabet = {"a", "b", "\xC4\x85", "c"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::pair<std::string, double>> pieces;
    std::set<std::string> seen;
    const std::size_t n_pieces = 1 + rng.uniform_below(8);
    while (pieces.size() < n_pieces) {
      std::string p;
      const std::size_t len = 1 + rng.uniform_below(3);
      for (std::size_t i = 0; i < len; ++i) {
        p += alphabet[rng.uniform_below(alphabet.size())];
      }
      if (!seen.insert(p).second) continue;
      pieces.push_back({p, -0.25 * static_cast<double>(1 + rng.uniform_below(20))});
    }
    const Vocab v = make_vocab(pieces);
    std::vector<std::string> chars;
    std::string text;
    const std::size_t len = rng.uniform_below(11);
    for (std::size_t i = 0; i < len; ++i) {
      chars.push_back(alphabet[rng.uniform_below(alphabet.size())]);
      text += chars.back();
    }
    std::vector<double> scores;
    enumerate_paths(v, chars, 0, 0.0, unk_score(v), scores);
    const double best = len == 0 ? 0.0 : *std::max_element(scores.begin(), scores.end());
    const Segmentation s = segment(v, text);
    EXPECT_EQ(best, s.total_score) << text;
    std::string joined;
    for (const auto& p : s.pieces) joined += p;
    EXPECT_EQ(text, joined);
  }
}

TEST(TextTest, WordTokenize) {
  EXPECT_EQ((std::vector<std::string>{"ala", "ma", "kota", "."}),
            word_tokenize("Ala ma kota."));
  EXPECT_TRUE(word_tokenize("").empty());
  EXPECT_EQ((std::vector<std::string>{"a", "b"}), word_tokenize("a  b"));
  EXPECT_EQ((std::vector<std::string>{"(", "żółć", ")", ",", "\xE2\x80\x9e", "x", "!", "?"}),
            word_tokenize("(ŻÓŁĆ), \xE2\x80\x9eX!?"));
  EXPECT_EQ((std::vector<std::string>{"m.in", "."}), word_tokenize("m.in."));
}

TEST(TextTest, SentenceSplit) {
  EXPECT_EQ((std::vector<std::string>{"A kot spał.", "Pies biegł."}),
            sentence_split("A kot spał. Pies biegł."));
  EXPECT_EQ(std::vector<std::string>{"bez kropki na końcu"},
            sentence_split("bez kropki na końcu"));
  EXPECT_EQ(std::vector<std::string>{"Prof. Nowak wstał."},
            sentence_split("Prof. Nowak wstał."));
  // an opening quote is not an uppercase letter, so "?!" does not end here
  EXPECT_EQ((std::vector<std::string>{"Czy to on?! \xE2\x80\x9eTak.\xE2\x80\x9d",
                                      "Rok 2020\xE2\x80\xA6", "Koniec"}),
            sentence_split("Czy to on?! \xE2\x80\x9eTak.\xE2\x80\x9d  Rok 2020\xE2\x80\xA6\n"
                           "Koniec"));
  EXPECT_EQ(std::vector<std::string>{"3.5 mln. zł"}, sentence_split("3.5 mln. zł"));
  EXPECT_TRUE(sentence_split("").empty());
  EXPECT_TRUE(sentence_split(" \n ").empty());
}

TEST(TextTest, AbbreviationList) {
  const auto& abbr = polish_abbreviations();
  EXPECT_GE(abbr.size(), 30u);
  for (const std::string a : {"prof.", "dr.", "m.in.", "np."}) {
    EXPECT_NE(abbr.end(), std::find(abbr.begin(), abbr.end(), a)) << a;
  }
}

std::string random_text(Rng& rng) {
  static const std::vector<std::string> parts = {
      "Ala", "kot", "prof.", "Nowak", ".", "!", "?", " ", "  ", "\n",
      "2020", "ma", "\xE2\x80\xA6", "\xE2\x80\x9d", "Źle", "np.", ")"};
  std::string s;
  const std::size_t n = rng.uniform_below(25);
  for (std::size_t i = 0; i < n; ++i) s += parts[rng.uniform_below(parts.size())];
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (const char32_t c : to_codepoints(s)) {
    if (!is_whitespace(c)) out += to_utf8({c});
  }
  return out;
}

TEST(TextTest, SplitProperties) {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string text = random_text(rng);
    const auto sentences = sentence_split(text);
    std::string joined;
    for (const auto& s : sentences) {
      EXPECT_FALSE(s.empty());
      EXPECT_EQ(std::string(trim(s)), s);
      joined += (joined.empty() ? "" : " ") + s;
    }
    // nothing but boundary whitespace is lost
    EXPECT_EQ(strip_spaces(text), strip_spaces(joined)) << text;
    // re-joining and re-splitting is stable
    EXPECT_EQ(sentences, sentence_split(joined)) << text;

    const auto words = word_tokenize(text);
    std::string wjoined;
    for (const auto& w : words) wjoined += (wjoined.empty() ? "" : " ") + w;
    EXPECT_EQ(words, word_tokenize(wjoined)) << text;
  }
}

TEST(TextTest, NormalizeCollapsesWhitespace) {
  EXPECT_EQ("a b", normalize(" \ta    b\n"));
  EXPECT_EQ("", normalize(" \n"));
  EXPECT_EQ("\xE2\x96\x81" "a" "\xE2\x96\x81" "b", add_whitespace_markers("a b"));
}

}  // namespace
}  // namespace t2t

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

#ifndef T2T_TEXT_H_
#define T2T_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace t2t {

// U+2581 LOWER ONE EIGHTH BLOCK, the word-boundary marker of unigram
// vocabularies.
inline constexpr std::string_view kWordBoundary = "\xE2\x96\x81";

// UTF-8 helpers. Invalid sequences decode as U+FFFD.
std::vector<char32_t> to_codepoints(std::string_view utf8);
std::string to_utf8(const std::vector<char32_t>& codepoints);
std::size_t codepoint_length(std::string_view utf8);
// Byte offsets of every codepoint start, plus utf8.size().
std::vector<std::size_t> codepoint_boundaries(std::string_view utf8);

bool is_whitespace(char32_t c);
bool is_punctuation(char32_t c);

std::string to_lower(std::string_view utf8);

// Trims Unicode whitespace from both ends.
std::string_view trim(std::string_view utf8);

// NFKC, then every run of Unicode whitespace becomes one ASCII space and the
// ends are trimmed.
std::string normalize(std::string_view text);

// "Ala ma" -> "▁Ala▁ma". Input must already be normalized.
std::string add_whitespace_markers(std::string_view normalized);

// Splits on Unicode whitespace, detaches each leading and trailing
// punctuation character into its own token, and lowercases.
// "Ala ma kota." -> {"ala", "ma", "kota", "."}
std::vector<std::string> word_tokenize(std::string_view text);

struct SentenceSpan {
  std::size_t begin;  // byte offsets into the input
  std::size_t end;
};

// Sentence boundaries: a run of terminators (. ! ? …), optionally followed
// by closing quotes or brackets, then whitespace, then an uppercase letter
// or digit. A period ending a word from the abbreviation list never closes
// a sentence. Spans exclude boundary whitespace; the text between spans is
// whitespace only.
std::vector<SentenceSpan> sentence_spans(std::string_view text);
std::vector<std::string> sentence_split(std::string_view text);

// Lowercased abbreviations (including the trailing period) that never end a
// sentence.
const std::vector<std::string>& polish_abbreviations();

}  // namespace t2t

#endif  // T2T_TEXT_H_

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

#include "t2t/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <stdexcept>

namespace t2t {

namespace {

struct Decoded {
  std::vector<char32_t> chars;
  std::vector<std::size_t> offsets;  // chars.size() + 1 entries
};

Decoded decode(std::string_view s) {
  Decoded out;
  out.chars.reserve(s.size());
  out.offsets.reserve(s.size() + 1);
  const auto* data = reinterpret_cast<const uint8_t*>(s.data());
  const int32_t length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    out.offsets.push_back(static_cast<std::size_t>(i));
    UChar32 c;
    U8_NEXT(data, i, length, c);
    out.chars.push_back(c < 0 ? char32_t{0xFFFD} : static_cast<char32_t>(c));
  }
  out.offsets.push_back(s.size());
  return out;
}

void append_utf8(std::string& out, char32_t c) {
  if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) c = 0xFFFD;
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, static_cast<UChar32>(c));
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

bool is_terminator(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == U'…';
}

bool is_closer(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U')': case U']': case U'”':
    case U'’': case U'»':
      return true;
    default:
      return false;
  }
}

bool opens_sentence(char32_t c) {
  return u_isupper(static_cast<UChar32>(c)) ||
         u_istitle(static_cast<UChar32>(c)) ||
         u_isdigit(static_cast<UChar32>(c));
}

}  // namespace

std::vector<char32_t> to_codepoints(std::string_view utf8) {
  return decode(utf8).chars;
}

std::string to_utf8(const std::vector<char32_t>& codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t c : codepoints) append_utf8(out, c);
  return out;
}

std::size_t codepoint_length(std::string_view utf8) {
  return decode(utf8).chars.size();
}

std::vector<std::size_t> codepoint_boundaries(std::string_view utf8) {
  return decode(utf8).offsets;
}

bool is_whitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool is_punctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

std::string to_lower(std::string_view utf8) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::string_view trim(std::string_view utf8) {
  const Decoded d = decode(utf8);
  std::size_t first = 0;
  std::size_t last = d.chars.size();
  while (first < last && is_whitespace(d.chars[first])) ++first;
  while (last > first && is_whitespace(d.chars[last - 1])) --last;
  return utf8.substr(d.offsets[first], d.offsets[last] - d.offsets[first]);
}

std::string normalize(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfkc = icu::Normalizer2::getNFKCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFKC normalizer unavailable");
  }
  const icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  const icu::UnicodeString normalized = nfkc->normalize(src, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("NFKC normalization failed");
  }
  std::string utf8;
  normalized.toUTF8String(utf8);

  std::string out;
  out.reserve(utf8.size());
  bool pending_space = false;
  for (char32_t c : decode(utf8).chars) {
    if (is_whitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, c);
  }
  return out;
}

std::string add_whitespace_markers(std::string_view normalized) {
  std::string out;
  if (normalized.empty()) return out;
  out.reserve(normalized.size() + 8);
  out.append(kWordBoundary);
  for (char c : normalized) {
    if (c == ' ') {
      out.append(kWordBoundary);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> word_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  const Decoded d = decode(text);
  const std::size_t n = d.chars.size();
  std::size_t i = 0;
  while (i < n) {
    if (is_whitespace(d.chars[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !is_whitespace(d.chars[j])) ++j;

    // Chunk [i, j): peel punctuation off both ends.
    std::size_t lo = i;
    std::size_t hi = j;
    while (lo < hi && is_punctuation(d.chars[lo])) ++lo;
    while (hi > lo && is_punctuation(d.chars[hi - 1])) --hi;
    for (std::size_t k = i; k < lo; ++k) {
      tokens.push_back(to_utf8({d.chars[k]}));
    }
    if (lo < hi) {
      tokens.push_back(to_lower(
          text.substr(d.offsets[lo], d.offsets[hi] - d.offsets[lo])));
    }
    for (std::size_t k = hi; k < j; ++k) {
      tokens.push_back(to_utf8({d.chars[k]}));
    }
    i = j;
  }
  return tokens;
}

const std::vector<std::string>& polish_abbreviations() {
  static const std::vector<std::string> kList = {
      "al.",   "ang.",  "art.",  "dr.",  "ds.",  "gen.", "godz.", "hab.",
      "im.",   "inż.",  "kpt.",  "ks.",  "m.in.", "mgr.", "mjr.", "mld.",
      "mln.",  "nr.",   "np.",   "ok.",  "pkt.", "pl.",  "płk.",  "por.",
      "prof.", "r.",    "str.",  "św.",  "tel.", "tj.",  "tys.",  "tzn.",
      "tzw.",  "ul.",   "ust.",  "w.",   "wg.",  "zob.",
  };
  return kList;
}

std::vector<SentenceSpan> sentence_spans(std::string_view text) {
  const Decoded d = decode(text);
  const std::size_t n = d.chars.size();
  const auto& abbreviations = polish_abbreviations();

  std::vector<SentenceSpan> spans;
  auto emit = [&](std::size_t from, std::size_t to) {
    while (from < to && is_whitespace(d.chars[from])) ++from;
    while (to > from && is_whitespace(d.chars[to - 1])) --to;
    if (from < to) spans.push_back({d.offsets[from], d.offsets[to]});
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!is_terminator(d.chars[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_terminator(d.chars[j])) ++j;
    std::size_t k = j;
    while (k < n && is_closer(d.chars[k])) ++k;
    std::size_t m = k;
    while (m < n && is_whitespace(d.chars[m])) ++m;
    const bool boundary = m > k && m < n && opens_sentence(d.chars[m]);
    if (!boundary) {
      i = j;
      continue;
    }
    if (j == i + 1 && d.chars[i] == U'.' && k == j) {
      // The word that ends with this period.
      std::size_t w = i;
      while (w > start && !is_whitespace(d.chars[w - 1])) --w;
      while (w < i && is_punctuation(d.chars[w]) && d.chars[w] != U'.') ++w;
      const std::string word =
          to_lower(text.substr(d.offsets[w], d.offsets[i + 1] - d.offsets[w]));
      if (std::find(abbreviations.begin(), abbreviations.end(), word) !=
          abbreviations.end()) {
        i = j;
        continue;
      }
    }
    emit(start, k);
    start = m;
    i = m;
  }
  emit(start, n);
  return spans;
}

std::vector<std::string> sentence_split(std::string_view text) {
  std::vector<std::string> out;
  for (const SentenceSpan& s : sentence_spans(text)) {
    out.emplace_back(text.substr(s.begin, s.end - s.begin));
  }
  return out;
}

}  // namespace t2t

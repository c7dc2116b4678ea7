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

#ifndef T2T_CORRUPTION_H_
#define T2T_CORRUPTION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "t2t/rng.h"
#include "t2t/vocab.h"

namespace t2t {

struct CorruptionConfig {
  double corruption_rate = 0.15;
  double mean_span_length = 3.0;
  std::uint64_t seed = 0;

  // Throws kInvalidConfig unless 0 <= rate < 1 and mean span >= 1.
  void validate() const;
};

struct DenoisingPair {
  TokenIds input;
  TokenIds target;
};

struct SpanPlan {
  std::size_t corrupted = 0;  // c
  std::size_t spans = 0;      // s
};

// c = max(1, round(rate * n)) capped at n - 1;
// s = max(1, round(c / mean_span)), lowered until c + s - 1 <= n.
SpanPlan plan_spans(const CorruptionConfig& cfg, std::size_t n);

// Replaces s non-adjacent random spans with sentinels 0..s-1. The target
// lists each sentinel followed by the span it replaced, then sentinel s and
// EOS. Span lengths are a uniform random composition of c into s parts, and
// the uncorrupted tokens are a uniform random composition of n - c into
// s + 1 gaps whose inner gaps are non-empty.
//
// Throws kTooShort (n < 2), kInvalidConfig, kInsufficientSentinels, and
// kInvalidArgument when `ids` holds a non-normal token.
DenoisingPair corrupt(const CorruptionConfig& cfg, const Vocab& vocab,
                      std::span<const TokenId> ids, Rng& rng);

// Puts every target span back at its input sentinel. Returns the original
// sequence for any pair produced by corrupt().
TokenIds splice(const Vocab& vocab, const DenoisingPair& pair);

struct Corpus {
  std::string name;
  std::uint64_t size;  // documents or tokens
};

// Corpora drawn with probability proportional to size.
class CorpusMixture {
 public:
  // Throws kEmptyMixture; kInvalidArgument for a zero size.
  explicit CorpusMixture(std::vector<Corpus> corpora);

  const std::vector<Corpus>& corpora() const { return corpora_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<Corpus> corpora_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;

  friend std::vector<std::string> sample_mixture(const CorpusMixture&, Rng&,
                                                 std::size_t);
};

// `k` independent draws.
std::vector<std::string> sample_mixture(const CorpusMixture& mixture, Rng& rng,
                                        std::size_t k);

}  // namespace t2t

#endif  // T2T_CORRUPTION_H_

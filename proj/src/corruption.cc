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

#include "t2t/corruption.h"

#include <algorithm>
#include <cmath>

#include "t2t/error.h"

namespace t2t {

namespace {

// Uniform composition of `total` into `parts` positive integers: choose
// parts - 1 distinct cut points in [1, total).
std::vector<std::size_t> positive_composition(std::size_t total,
                                              std::size_t parts, Rng& rng) {
  std::vector<std::size_t> out;
  out.reserve(parts);
  const auto cuts = rng.sample_without_replacement(total - 1, parts - 1);
  std::size_t prev = 0;
  for (const auto cut : cuts) {
    out.push_back(static_cast<std::size_t>(cut + 1) - prev);
    prev = static_cast<std::size_t>(cut + 1);
  }
  out.push_back(total - prev);
  return out;
}

}  // namespace

void CorruptionConfig::validate() const {
  if (!(corruption_rate >= 0.0 && corruption_rate < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "corruption rate must be in [0, 1)");
  }
  if (!(mean_span_length >= 1.0) || !std::isfinite(mean_span_length)) {
    throw Error(ErrorCode::kInvalidConfig, "mean span length must be >= 1");
  }
}

SpanPlan plan_spans(const CorruptionConfig& cfg, std::size_t n) {
  cfg.validate();
  if (n < 2) {
    throw Error(ErrorCode::kTooShort,
                "need at least 2 tokens, got " + std::to_string(n));
  }
  const auto rounded = static_cast<std::size_t>(
      std::llround(cfg.corruption_rate * static_cast<double>(n)));
  const std::size_t c = std::min(std::max<std::size_t>(1, rounded), n - 1);
  std::size_t s = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(static_cast<double>(c) /
                                               cfg.mean_span_length)));
  s = std::min(s, c);
  while (s > 1 && c + s - 1 > n) --s;
  return {c, s};
}

DenoisingPair corrupt(const CorruptionConfig& cfg, const Vocab& vocab,
                      std::span<const TokenId> ids, Rng& rng) {
  const std::size_t n = ids.size();
  const SpanPlan plan = plan_spans(cfg, n);
  for (const TokenId id : ids) {
    if (vocab.kind(id) != PieceKind::kNormal) {
      throw Error(ErrorCode::kInvalidArgument,
                  "special token " + std::to_string(id) + " in input");
    }
  }
  const std::size_t c = plan.corrupted;
  const std::size_t s = plan.spans;
  if (vocab.num_sentinels() < s + 1) {
    throw Error(ErrorCode::kInsufficientSentinels,
                std::to_string(s + 1) + " sentinels needed, vocab has " +
                    std::to_string(vocab.num_sentinels()));
  }

  const std::vector<std::size_t> span_lengths = positive_composition(c, s, rng);
  // Gaps g_0..g_s: inner gaps take one mandatory token each, the remainder
  // is spread as a non-negative composition (shift each part by one).
  const std::size_t free_tokens = (n - c) - (s - 1);
  std::vector<std::size_t> gaps = positive_composition(free_tokens + s + 1, s + 1, rng);
  for (std::size_t g = 0; g <= s; ++g) {
    gaps[g] -= 1;
    if (g > 0 && g < s) gaps[g] += 1;
  }

  DenoisingPair pair;
  pair.input.reserve(n - c + s);
  pair.target.reserve(c + s + 2);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < s; ++k) {
    pair.input.insert(pair.input.end(), ids.begin() + pos,
                      ids.begin() + pos + gaps[k]);
    pos += gaps[k];
    const TokenId sentinel = vocab.sentinel_id(k);
    pair.input.push_back(sentinel);
    pair.target.push_back(sentinel);
    pair.target.insert(pair.target.end(), ids.begin() + pos,
                       ids.begin() + pos + span_lengths[k]);
    pos += span_lengths[k];
  }
  pair.input.insert(pair.input.end(), ids.begin() + pos, ids.end());
  pair.target.push_back(vocab.sentinel_id(s));
  pair.target.push_back(vocab.eos_id());
  return pair;
}

TokenIds splice(const Vocab& vocab, const DenoisingPair& pair) {
  // Target span k runs from after sentinel k to the next sentinel.
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (std::size_t i = 0; i < pair.target.size(); ++i) {
    if (!vocab.is_sentinel(pair.target[i])) continue;
    if (!spans.empty()) spans.back().second = i;
    spans.emplace_back(i + 1, pair.target.size());
  }
  TokenIds out;
  std::size_t k = 0;
  for (const TokenId id : pair.input) {
    if (vocab.is_sentinel(id) && k < spans.size()) {
      const auto [b, e] = spans[k++];
      out.insert(out.end(), pair.target.begin() + b, pair.target.begin() + e);
    } else {
      out.push_back(id);
    }
  }
  return out;
}

CorpusMixture::CorpusMixture(std::vector<Corpus> corpora)
    : corpora_(std::move(corpora)) {
  if (corpora_.empty()) throw Error(ErrorCode::kEmptyMixture, "no corpora");
  double total = 0.0;
  for (const Corpus& c : corpora_) {
    if (c.size == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "corpus '" + c.name + "' has size 0");
    }
    total += static_cast<double>(c.size);
  }
  double running = 0.0;
  for (const Corpus& c : corpora_) {
    weights_.push_back(static_cast<double>(c.size) / total);
    running += weights_.back();
    cumulative_.push_back(running);
  }
  cumulative_.back() = 1.0;
}

std::vector<std::string> sample_mixture(const CorpusMixture& mixture, Rng& rng,
                                        std::size_t k) {
  std::vector<std::string> out;
  out.reserve(k);
  const auto& cum = mixture.cumulative_;
  for (std::size_t i = 0; i < k; ++i) {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    const auto idx = std::min<std::size_t>(
        static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
    out.push_back(mixture.corpora_[idx].name);
  }
  return out;
}

}  // namespace t2t

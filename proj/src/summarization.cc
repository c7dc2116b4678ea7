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

#include "t2t/summarization.h"

#include <cmath>
#include <limits>
#include <set>

#include "t2t/error.h"
#include "t2t/text.h"
#include "t2t/tokenizer.h"

namespace t2t {

namespace {

std::vector<std::string> checked_sentences(std::string_view source) {
  std::vector<std::string> sentences = sentence_split(source);
  if (sentences.empty()) throw Error(ErrorCode::kEmptySource, "empty source");
  return sentences;
}

std::set<std::vector<std::string>> ngram_types(
    const std::vector<std::string>& tokens, std::size_t n) {
  std::set<std::vector<std::string>> out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    out.emplace(tokens.begin() + i, tokens.begin() + i + n);
  }
  return out;
}

template <typename Candidate>
BaselineResult evaluate_candidates(const std::vector<SummaryGroup>& groups,
                                   Candidate candidate_for) {
  RougeAccumulator acc;
  for (const SummaryGroup& g : groups) {
    const std::string candidate = candidate_for(g.source_text);
    for (const Reference& r : g.references) acc.add(rouge(candidate, r.text));
  }
  return {acc.mean(), acc.count()};
}

}  // namespace

std::string join_sentences(const std::vector<std::string>& sentences,
                           std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count && i < sentences.size(); ++i) {
    if (i > 0) out += ' ';
    out += sentences[i];
  }
  return out;
}

std::string lead_baseline(std::string_view source, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  return join_sentences(checked_sentences(source), n);
}

std::size_t adaptive_lead_count(std::string_view source,
                                double avg_target_len) {
  if (!(avg_target_len > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "average target length must be positive");
  }
  const std::vector<std::string> sentences = checked_sentences(source);
  std::size_t best = 1;
  double best_gap = std::numeric_limits<double>::infinity();
  std::size_t length = 0;
  for (std::size_t n = 1; n <= sentences.size(); ++n) {
    length += codepoint_length(sentences[n - 1]) + (n > 1 ? 1 : 0);
    const double gap = std::abs(static_cast<double>(length) - avg_target_len);
    if (gap < best_gap) {
      best_gap = gap;
      best = n;
    }
  }
  return best;
}

std::string adaptive_lead_baseline(std::string_view source,
                                   double avg_target_len) {
  const std::size_t n = adaptive_lead_count(source, avg_target_len);
  return join_sentences(sentence_split(source), n);
}

double average_target_length(const std::vector<SummaryGroup>& groups) {
  std::size_t total = 0;
  std::size_t count = 0;
  for (const SummaryGroup& g : groups) {
    for (const Reference& r : g.references) {
      total += codepoint_length(r.text);
      ++count;
    }
  }
  return count == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(count);
}

UpperBound human_upper_bound(const std::vector<SummaryGroup>& groups,
                             bool same_ratio) {
  UpperBound result;
  RougeAccumulator acc;
  for (const SummaryGroup& g : groups) {
    const auto& refs = g.references;
    if (refs.size() < 2) {
      ++result.skipped_groups;
      continue;
    }
    for (std::size_t i = 0; i < refs.size(); ++i) {
      for (std::size_t j = 0; j < refs.size(); ++j) {
        if (i == j) continue;
        if (same_ratio && refs[i].ratio != refs[j].ratio) continue;
        acc.add(rouge(refs[i].text, refs[j].text));
      }
    }
  }
  if (acc.count() == 0) {
    throw Error(ErrorCode::kNoPairs, "no group has two comparable references");
  }
  result.mean = acc.mean();
  result.pairs = acc.count();
  return result;
}

double abstractedness(const std::vector<SummaryGroup>& groups, std::size_t n) {
  if (n < 1 || n > 5) {
    throw Error(ErrorCode::kInvalidArgument, "n must be in 1..5");
  }
  double sum = 0.0;
  std::size_t pairs = 0;
  for (const SummaryGroup& g : groups) {
    const auto article = ngram_types(word_tokenize(g.source_text), n);
    for (const Reference& r : g.references) {
      const auto summary = ngram_types(word_tokenize(r.text), n);
      if (summary.empty()) continue;
      std::size_t novel = 0;
      for (const auto& gram : summary) {
        if (!article.contains(gram)) ++novel;
      }
      sum += static_cast<double>(novel) / static_cast<double>(summary.size());
      ++pairs;
    }
  }
  if (pairs == 0) {
    throw Error(ErrorCode::kNoPairs, "no summary with " + std::to_string(n) +
                                         " or more words");
  }
  return sum / static_cast<double>(pairs);
}

double compression_ratio(const std::vector<SummaryGroup>& groups) {
  if (groups.empty()) throw Error(ErrorCode::kUndefinedRatio, "no groups");
  std::size_t source_total = 0;
  for (const SummaryGroup& g : groups) {
    source_total += codepoint_length(g.source_text);
  }
  const double avg_source =
      static_cast<double>(source_total) / static_cast<double>(groups.size());
  const double avg_target = average_target_length(groups);
  if (!(avg_target > 0.0)) {
    throw Error(ErrorCode::kUndefinedRatio, "average summary length is zero");
  }
  return avg_source / avg_target;
}

double trimming_coverage(const std::vector<SummaryGroup>& groups,
                         const Vocab& vocab, std::size_t limit) {
  if (limit == 0) throw Error(ErrorCode::kInvalidArgument, "limit must be >= 1");
  if (groups.empty()) return 1.0;
  double sum = 0.0;
  for (const SummaryGroup& g : groups) {
    const std::size_t tokens = encode(vocab, g.source_text).size();
    sum += tokens <= limit ? 1.0
                           : static_cast<double>(limit) /
                                 static_cast<double>(tokens);
  }
  return sum / static_cast<double>(groups.size());
}

DatasetStats dataset_stats(const std::vector<SummaryGroup>& groups) {
  DatasetStats stats;
  std::size_t source_total = 0;
  for (const SummaryGroup& g : groups) {
    source_total += codepoint_length(g.source_text);
  }
  stats.avg_source_len =
      groups.empty() ? 0.0
                     : static_cast<double>(source_total) /
                           static_cast<double>(groups.size());
  stats.avg_target_len = average_target_length(groups);
  stats.compression_ratio = compression_ratio(groups);
  for (std::size_t n = 1; n <= 5; ++n) {
    try {
      stats.abstractedness[n] = abstractedness(groups, n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoPairs) throw;
    }
  }
  return stats;
}

BaselineResult evaluate_lead(const std::vector<SummaryGroup>& groups,
                             std::size_t n) {
  return evaluate_candidates(
      groups, [n](std::string_view src) { return lead_baseline(src, n); });
}

BaselineResult evaluate_adaptive_lead(const std::vector<SummaryGroup>& groups,
                                      double avg_target_len) {
  return evaluate_candidates(groups, [avg_target_len](std::string_view src) {
    return adaptive_lead_baseline(src, avg_target_len);
  });
}

}  // namespace t2t

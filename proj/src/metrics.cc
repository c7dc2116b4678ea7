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

#include "t2t/metrics.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>

#include "t2t/error.h"
#include "t2t/text.h"

namespace t2t {

namespace {

using NgramCounts = std::map<std::vector<std::string_view>, std::size_t>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens,
                         std::size_t n) {
  NgramCounts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> key(tokens.begin() + i,
                                      tokens.begin() + i + n);
    ++counts[std::move(key)];
  }
  return counts;
}

std::size_t total_count(const NgramCounts& counts) {
  std::size_t total = 0;
  for (const auto& [_, c] : counts) total += c;
  return total;
}

std::size_t clipped_overlap(const NgramCounts& candidate,
                            const NgramCounts& reference) {
  std::size_t overlap = 0;
  for (const auto& [gram, c] : candidate) {
    const auto it = reference.find(gram);
    if (it != reference.end()) overlap += std::min(c, it->second);
  }
  return overlap;
}

void check_arity(std::size_t predictions, std::size_t golds) {
  if (predictions != golds) {
    throw Error(ErrorCode::kArityError,
                std::to_string(predictions) + " predictions vs " +
                    std::to_string(golds) + " references");
  }
  if (predictions == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "no examples");
  }
}

std::optional<double> parse_rating(std::string_view text) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() ||
      !std::isfinite(v) || v < 1.0 || v > 5.0) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

double f_measure(double precision, double recall) {
  const double denom = precision + recall;
  return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

PrecisionRecall make_score(double precision, double recall) {
  return {precision, recall, f_measure(precision, recall)};
}

double RougeScore::mean_f() const {
  return (rouge1.fmeasure + rouge2.fmeasure + rougeL.fmeasure) / 3.0;
}

PrecisionRecall rouge_n(const std::vector<std::string>& candidate,
                        const std::vector<std::string>& reference,
                        std::size_t n) {
  const NgramCounts cand = count_ngrams(candidate, n);
  const NgramCounts ref = count_ngrams(reference, n);
  const std::size_t cand_total = total_count(cand);
  const std::size_t ref_total = total_count(ref);
  if (cand_total == 0 || ref_total == 0) {
    // Too short for n-grams: only an exact copy counts as a match.
    if (!candidate.empty() && candidate == reference) return make_score(1, 1);
    return {};
  }
  const auto overlap = static_cast<double>(clipped_overlap(cand, ref));
  return make_score(overlap / static_cast<double>(cand_total),
                    overlap / static_cast<double>(ref_total));
}

PrecisionRecall rouge_n(std::string_view candidate, std::string_view reference,
                        std::size_t n) {
  return rouge_n(word_tokenize(candidate), word_tokenize(reference), n);
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

PrecisionRecall rouge_l(const std::vector<std::string>& candidate,
                        const std::vector<std::string>& reference) {
  if (candidate.empty() || reference.empty()) return {};
  const auto lcs = static_cast<double>(lcs_length(candidate, reference));
  return make_score(lcs / static_cast<double>(candidate.size()),
                    lcs / static_cast<double>(reference.size()));
}

PrecisionRecall rouge_l(std::string_view candidate, std::string_view reference) {
  return rouge_l(word_tokenize(candidate), word_tokenize(reference));
}

RougeScore rouge(std::string_view candidate, std::string_view reference) {
  const auto cand = word_tokenize(candidate);
  const auto ref = word_tokenize(reference);
  return {rouge_n(cand, ref, 1), rouge_n(cand, ref, 2), rouge_l(cand, ref)};
}

RougeScore rouge_multi(std::string_view candidate,
                       const std::vector<std::string>& references) {
  RougeScore best;
  bool first = true;
  for (const std::string& ref : references) {
    const RougeScore s = rouge(candidate, ref);
    if (first || s.mean_f() > best.mean_f()) best = s;
    first = false;
  }
  return best;
}

void RougeAccumulator::add(const RougeScore& s) {
  auto add_pr = [](PrecisionRecall& into, const PrecisionRecall& x) {
    into.precision += x.precision;
    into.recall += x.recall;
    into.fmeasure += x.fmeasure;
  };
  add_pr(sum_.rouge1, s.rouge1);
  add_pr(sum_.rouge2, s.rouge2);
  add_pr(sum_.rougeL, s.rougeL);
  ++count_;
}

RougeScore RougeAccumulator::mean() const {
  if (count_ == 0) return {};
  const auto n = static_cast<double>(count_);
  auto div = [n](const PrecisionRecall& x) {
    return PrecisionRecall{x.precision / n, x.recall / n, x.fmeasure / n};
  };
  return {div(sum_.rouge1), div(sum_.rouge2), div(sum_.rougeL)};
}

BleuResult bleu_multi(const std::vector<std::string>& candidates,
                      const std::vector<std::vector<std::string>>& references,
                      const BleuOptions& options) {
  check_arity(candidates.size(), references.size());
  const std::size_t max_order = options.max_order;
  std::vector<std::size_t> matches(max_order + 1, 0);
  std::vector<std::size_t> totals(max_order + 1, 0);
  std::size_t cand_len = 0;
  std::size_t ref_len = 0;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (references[i].empty()) {
      throw Error(ErrorCode::kArityError,
                  "no reference for example " + std::to_string(i));
    }
    const auto cand = word_tokenize(candidates[i]);
    std::vector<std::vector<std::string>> refs;
    for (const std::string& r : references[i]) refs.push_back(word_tokenize(r));

    cand_len += cand.size();
    std::size_t closest = refs.front().size();
    for (const auto& r : refs) {
      const auto d = [&](std::size_t len) {
        return len > cand.size() ? len - cand.size() : cand.size() - len;
      };
      if (d(r.size()) < d(closest) ||
          (d(r.size()) == d(closest) && r.size() < closest)) {
        closest = r.size();
      }
    }
    ref_len += closest;

    for (std::size_t n = 1; n <= max_order; ++n) {
      const NgramCounts c = count_ngrams(cand, n);
      NgramCounts max_ref;
      for (const auto& r : refs) {
        for (const auto& [gram, k] : count_ngrams(r, n)) {
          auto& slot = max_ref[gram];
          slot = std::max(slot, k);
        }
      }
      // Keys of `c` point into `cand`, which outlives this scope.
      matches[n] += clipped_overlap(c, max_ref);
      totals[n] += total_count(c);
    }
  }

  BleuResult result;
  result.candidate_length = cand_len;
  result.reference_length = ref_len;
  // Orders with no candidate n-grams at all are left out of the geometric
  // mean, so a corpus of short sentences can still reach 100.
  double log_sum = 0.0;
  std::size_t effective_order = 0;
  bool zero = false;
  for (std::size_t n = 1; n <= max_order; ++n) {
    double p = 0.0;
    if (totals[n] > 0) {
      ++effective_order;
      const double m = matches[n] > 0 ? static_cast<double>(matches[n])
                                      : options.epsilon;
      p = m / static_cast<double>(totals[n]);
      if (p <= 0.0) {
        zero = true;
      } else {
        log_sum += std::log(p);
      }
    }
    result.precisions.push_back(p);
  }
  if (effective_order == 0) zero = true;
  if (cand_len == 0) {
    result.brevity_penalty = 0.0;
  } else if (cand_len < ref_len) {
    result.brevity_penalty =
        std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(cand_len));
  } else {
    result.brevity_penalty = 1.0;
  }
  result.score = zero ? 0.0
                      : 100.0 * result.brevity_penalty *
                            std::exp(log_sum / static_cast<double>(effective_order));
  return result;
}

BleuResult bleu(const std::vector<std::string>& candidates,
                const std::vector<std::string>& references,
                const BleuOptions& options) {
  check_arity(candidates.size(), references.size());
  std::vector<std::vector<std::string>> refs;
  refs.reserve(references.size());
  for (const std::string& r : references) refs.push_back({r});
  return bleu_multi(candidates, refs, options);
}

bool labels_match(std::string_view prediction, std::string_view gold) {
  return trim(prediction) == trim(gold);
}

double exact_match_accuracy(const std::vector<std::string>& predictions,
                            const std::vector<std::string>& golds) {
  check_arity(predictions.size(), golds.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (labels_match(predictions[i], golds[i])) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(predictions.size());
}

double f1_binary(const std::vector<std::string>& predictions,
                 const std::vector<std::string>& golds,
                 std::string_view positive) {
  check_arity(predictions.size(), golds.size());
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const bool pred_pos = labels_match(predictions[i], positive);
    const bool gold_pos = labels_match(golds[i], positive);
    if (pred_pos && gold_pos) ++tp;
    if (pred_pos && !gold_pos) ++fp;
    if (!pred_pos && gold_pos) ++fn;
  }
  if (tp + fp + fn == 0) return 1.0;
  return 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
}

double ar_score(const std::vector<std::string>& predictions,
                const std::vector<std::string>& golds) {
  check_arity(predictions.size(), golds.size());
  // gold value -> (error sum, count)
  std::map<double, std::pair<double, std::size_t>> classes;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const auto gold = parse_rating(golds[i]);
    if (!gold) {
      throw Error(ErrorCode::kInvalidLabel,
                  "gold rating '" + golds[i] + "' is not in 1..5");
    }
    const auto pred = parse_rating(predictions[i]);
    const double err = pred ? std::abs(*pred - *gold) : kArUnparseablePenalty;
    auto& [sum, count] = classes[*gold];
    sum += err;
    ++count;
  }
  double wmae = 0.0;
  for (const auto& [_, acc] : classes) {
    wmae += acc.first / static_cast<double>(acc.second);
  }
  wmae /= static_cast<double>(classes.size());
  return 1.0 - wmae;
}

}  // namespace t2t

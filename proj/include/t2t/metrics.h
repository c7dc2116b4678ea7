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

#ifndef T2T_METRICS_H_
#define T2T_METRICS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace t2t {

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  double fmeasure = 0.0;
};

// 2pr / (p + r), or 0 when p + r == 0.
double f_measure(double precision, double recall);
PrecisionRecall make_score(double precision, double recall);

struct RougeScore {
  PrecisionRecall rouge1;
  PrecisionRecall rouge2;
  PrecisionRecall rougeL;

  // (f1 + f2 + fL) / 3
  double mean_f() const;
};

// Scores over word_tokenize() output. When the candidate or the reference has
// no n-grams the score is 1 for identical non-empty token lists and 0
// otherwise.
PrecisionRecall rouge_n(const std::vector<std::string>& candidate,
                        const std::vector<std::string>& reference,
                        std::size_t n);
PrecisionRecall rouge_n(std::string_view candidate, std::string_view reference,
                        std::size_t n);
PrecisionRecall rouge_l(const std::vector<std::string>& candidate,
                        const std::vector<std::string>& reference);
PrecisionRecall rouge_l(std::string_view candidate, std::string_view reference);
RougeScore rouge(std::string_view candidate, std::string_view reference);
// Best-by-mean_f over several references.
RougeScore rouge_multi(std::string_view candidate,
                       const std::vector<std::string>& references);

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b);

// Component-wise running mean of RougeScore values.
class RougeAccumulator {
 public:
  void add(const RougeScore& s);
  std::size_t count() const { return count_; }
  RougeScore mean() const;

 private:
  RougeScore sum_;
  std::size_t count_ = 0;
};

struct BleuOptions {
  std::size_t max_order = 4;
  // 0 disables smoothing: a zero precision gives BLEU 0. Otherwise zero
  // match counts are replaced by this value.
  double epsilon = 0.0;
};

struct BleuResult {
  double score = 0.0;  // 0..100
  std::vector<double> precisions;
  double brevity_penalty = 0.0;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
};

// Corpus BLEU; n-gram counts and lengths are summed over the corpus before
// the precisions are formed. Throws kArityError, kUndefinedMetric.
BleuResult bleu(const std::vector<std::string>& candidates,
                const std::vector<std::string>& references,
                const BleuOptions& options = {});
// Multi-reference variant: clipping by the max count over references and
// the closest reference length (shorter wins ties).
BleuResult bleu_multi(const std::vector<std::string>& candidates,
                      const std::vector<std::vector<std::string>>& references,
                      const BleuOptions& options = {});

// Exact match after trimming Unicode whitespace.
bool labels_match(std::string_view prediction, std::string_view gold);

// Throws kArityError, kUndefinedMetric.
double exact_match_accuracy(const std::vector<std::string>& predictions,
                            const std::vector<std::string>& golds);

// 2TP / (2TP + FP + FN) for `positive`; 1.0 when TP + FP + FN == 0.
double f1_binary(const std::vector<std::string>& predictions,
                 const std::vector<std::string>& golds,
                 std::string_view positive);

// Error charged for a prediction that is not a number in [1, 5].
inline constexpr double kArUnparseablePenalty = 4.0;

// 1 - wMAE, where wMAE is the mean over gold classes of the class mean
// absolute error. Not clamped: the range is [-3, 1].
// Throws kArityError, kUndefinedMetric, kInvalidLabel (gold not in 1..5).
double ar_score(const std::vector<std::string>& predictions,
                const std::vector<std::string>& golds);

}  // namespace t2t

#endif  // T2T_METRICS_H_

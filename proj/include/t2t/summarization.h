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

#ifndef T2T_SUMMARIZATION_H_
#define T2T_SUMMARIZATION_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "t2t/metrics.h"
#include "t2t/vocab.h"

namespace t2t {

enum class SummaryKind { kExtract, kAbstract, kUnknown };

struct Reference {
  std::string text;
  std::string annotator;
  std::string ratio = "unknown";  // "5%", "10%", "20%" or "unknown"
  SummaryKind kind = SummaryKind::kUnknown;
};

struct SummaryGroup {
  std::string source_id;
  std::string source_text;
  std::vector<Reference> references;
};

// Sentences joined with single spaces.
std::string join_sentences(const std::vector<std::string>& sentences,
                           std::size_t count);

// First min(n, #sentences) sentences. Throws kEmptySource, kInvalidArgument.
std::string lead_baseline(std::string_view source, std::size_t n);

// Number of leading sentences whose joined length in characters is closest
// to `avg_target_len`; ties go to the smaller count.
std::size_t adaptive_lead_count(std::string_view source, double avg_target_len);
std::string adaptive_lead_baseline(std::string_view source,
                                   double avg_target_len);

// Mean character length of all references.
double average_target_length(const std::vector<SummaryGroup>& groups);

struct UpperBound {
  RougeScore mean;
  std::size_t pairs = 0;
  std::size_t skipped_groups = 0;
};

// Mean ROUGE over every ordered pair (i != j) of references within a group,
// pooled across groups. With `same_ratio`, only pairs sharing a ratio tag.
// Groups with fewer than two references are skipped. Throws kNoPairs.
UpperBound human_upper_bound(const std::vector<SummaryGroup>& groups,
                             bool same_ratio = false);

// Per (reference, source) pair: share of distinct summary n-grams missing
// from the source; averaged over pairs. Pairs whose summary has fewer than
// n words are skipped. Throws kInvalidArgument (n outside 1..5), kNoPairs.
double abstractedness(const std::vector<SummaryGroup>& groups, std::size_t n);

// Average source length / average reference length, in characters.
// Throws kUndefinedRatio.
double compression_ratio(const std::vector<SummaryGroup>& groups);

// Mean over sources of min(1, limit / |encode(source)|).
// Throws kInvalidArgument for limit == 0.
double trimming_coverage(const std::vector<SummaryGroup>& groups,
                         const Vocab& vocab, std::size_t limit);

struct DatasetStats {
  double avg_source_len = 0.0;
  double avg_target_len = 0.0;
  double compression_ratio = 0.0;
  std::map<std::size_t, double> abstractedness;  // n -> fraction
};

DatasetStats dataset_stats(const std::vector<SummaryGroup>& groups);

// Scores a lead baseline against every reference of every group.
struct BaselineResult {
  RougeScore mean;
  std::size_t pairs = 0;
};
BaselineResult evaluate_lead(const std::vector<SummaryGroup>& groups,
                             std::size_t n);
BaselineResult evaluate_adaptive_lead(const std::vector<SummaryGroup>& groups,
                                      double avg_target_len);

}  // namespace t2t

#endif  // T2T_SUMMARIZATION_H_

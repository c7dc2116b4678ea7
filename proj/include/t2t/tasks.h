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

#ifndef T2T_TASKS_H_
#define T2T_TASKS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "t2t/vocab.h"

namespace t2t {

enum class ArchitectureStyle { kEncoderDecoder, kDecoderOnly };

struct TaskSpec {
  std::string name;
  std::string prefix1;
  std::optional<std::string> prefix2;
  // Present for classification tasks.
  std::optional<std::vector<std::string>> labels;
  ArchitectureStyle style = ArchitectureStyle::kEncoderDecoder;
  // Machine translation: prepended to the raw source, prefixes unused.
  std::optional<std::string> direction_token;

  bool is_classification() const { return labels.has_value(); }
  bool takes_two_texts() const { return prefix2.has_value(); }

  // Throws kInvalidSpec.
  void validate() const;
};

struct FormattedExample {
  std::string source;
  std::string target;

  bool operator==(const FormattedExample&) const = default;
};

// KLEJ tasks in table order, then the QA and MT specs.
const std::vector<TaskSpec>& task_registry();
// The seven KLEJ entries only.
std::vector<TaskSpec> klej_specs();
// Accepts "PolEmo2.0-IN"/"PolEmo2.0-OUT" as aliases. Throws kUnknownTask.
const TaskSpec& find_task(std::string_view name);

TaskSpec with_style(TaskSpec spec, ArchitectureStyle style);

// "<prefix1>: <text1>[ <prefix2>: <text2>]" plus " [SEP]" for decoder-only
// models; MT specs give "<direction> <text1>".
// Throws kArityError, kInvalidLabel.
FormattedExample format_example(const TaskSpec& spec, std::string_view text1,
                                const std::optional<std::string>& text2,
                                std::string_view target);

// QA with retrieved passages: "pytanie: <q> kontekst: <p1> <p2> ...".
FormattedExample format_qa_with_passages(std::string_view question,
                                         const std::vector<std::string>& passages,
                                         std::string_view answer);

// Tokens of the longest label plus one for EOS. Throws kNotClassification.
std::size_t max_target_length(const TaskSpec& spec, const Vocab& vocab);

// Exact match after removing "</s>"/"<pad>" renderings and trimming Unicode
// whitespace.
std::optional<std::string> decode_label(const TaskSpec& spec,
                                        std::string_view generated);

// TSV rendering "task<TAB>prefix1<TAB>prefix2<TAB>labels" with "-" for a
// missing prefix and labels joined by ", ".
std::string render_spec_table(const std::vector<TaskSpec>& specs);

}  // namespace t2t

#endif  // T2T_TASKS_H_

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

#include "t2t/tasks.h"

#include <algorithm>
#include <set>

#include "t2t/error.h"
#include "t2t/text.h"
#include "t2t/tokenizer.h"

namespace t2t {

namespace {

TaskSpec classification(std::string name, std::string prefix1,
                        std::optional<std::string> prefix2,
                        std::vector<std::string> labels) {
  TaskSpec spec;
  spec.name = std::move(name);
  spec.prefix1 = std::move(prefix1);
  spec.prefix2 = std::move(prefix2);
  spec.labels = std::move(labels);
  return spec;
}

TaskSpec generation(std::string name, std::string prefix1,
                    std::optional<std::string> prefix2 = std::nullopt) {
  TaskSpec spec;
  spec.name = std::move(name);
  spec.prefix1 = std::move(prefix1);
  spec.prefix2 = std::move(prefix2);
  return spec;
}

TaskSpec translation(std::string name, std::string direction) {
  TaskSpec spec;
  spec.name = std::move(name);
  spec.prefix1 = direction;
  spec.direction_token = std::move(direction);
  return spec;
}

constexpr std::size_t kKlejCount = 7;

std::vector<TaskSpec> build_registry() {
  std::vector<TaskSpec> specs = {
      classification("NKJP-NER", "zdanie", std::nullopt,
                     {"geograficzna", "brak", "organizacja", "osoba",
                      "miejsce", "czas"}),
      classification("CBD", "zdanie", std::nullopt, {"neutralna", "przemoc"}),
      classification("Czy wiesz?", "pytanie", "odpowiedź",
                     {"fałsz", "prawda"}),
      classification("PolEmo2.0", "zdanie", std::nullopt,
                     {"niejednoznaczny", "negatywny", "pozytywny",
                      "neutralny"}),
      classification("AR", "zdanie", std::nullopt,
                     {"1.0", "2.0", "3.0", "4.0", "5.0"}),
      classification("PSC", "streszczenie 1", "streszczenie 2",
                     {"nie_parafraza", "parafraza"}),
      classification("CDSC-E", "zdanie 1", "zdanie 2",
                     {"neutralny", "wynikanie", "sprzeczność"}),
      generation("QA-open", "pytanie"),
      generation("QA-passages", "pytanie", "kontekst"),
      translation("MT-pl-en", "<2en>"),
      translation("MT-en-pl", "<2pl>"),
  };
  for (const TaskSpec& s : specs) s.validate();
  return specs;
}

std::string strip_all(std::string text, std::string_view needle) {
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos)) {
    text.erase(pos, needle.size());
  }
  return text;
}

}  // namespace

void TaskSpec::validate() const {
  if (name.empty() || prefix1.empty() || (prefix2 && prefix2->empty())) {
    throw Error(ErrorCode::kInvalidSpec, "empty name or prefix in '" + name + "'");
  }
  if (labels) {
    const std::set<std::string> distinct(labels->begin(), labels->end());
    if (labels->size() < 2 || distinct.size() != labels->size()) {
      throw Error(ErrorCode::kInvalidSpec,
                  "'" + name + "' needs at least two distinct labels");
    }
  }
}

const std::vector<TaskSpec>& task_registry() {
  static const std::vector<TaskSpec> kRegistry = build_registry();
  return kRegistry;
}

std::vector<TaskSpec> klej_specs() {
  const auto& all = task_registry();
  return {all.begin(), all.begin() + kKlejCount};
}

const TaskSpec& find_task(std::string_view name) {
  std::string_view key = name;
  if (key == "PolEmo2.0-IN" || key == "PolEmo2.0-OUT") key = "PolEmo2.0";
  for (const TaskSpec& spec : task_registry()) {
    if (spec.name == key) return spec;
  }
  throw Error(ErrorCode::kUnknownTask, std::string(name));
}

TaskSpec with_style(TaskSpec spec, ArchitectureStyle style) {
  spec.style = style;
  return spec;
}

FormattedExample format_example(const TaskSpec& spec, std::string_view text1,
                                const std::optional<std::string>& text2,
                                std::string_view target) {
  if (spec.direction_token) {
    if (text2) {
      throw Error(ErrorCode::kArityError, spec.name + " takes one text");
    }
    return {*spec.direction_token + " " + std::string(text1),
            std::string(target)};
  }
  if (text2.has_value() != spec.takes_two_texts()) {
    throw Error(ErrorCode::kArityError,
                spec.name + (spec.takes_two_texts() ? " takes two texts"
                                                    : " takes one text"));
  }
  if (spec.labels &&
      std::find(spec.labels->begin(), spec.labels->end(), target) ==
          spec.labels->end()) {
    throw Error(ErrorCode::kInvalidLabel,
                "'" + std::string(target) + "' for " + spec.name);
  }
  std::string source = spec.prefix1 + ": " + std::string(text1);
  if (text2) source += " " + *spec.prefix2 + ": " + *text2;
  if (spec.style == ArchitectureStyle::kDecoderOnly) source += " [SEP]";
  return {std::move(source), std::string(target)};
}

FormattedExample format_qa_with_passages(
    std::string_view question, const std::vector<std::string>& passages,
    std::string_view answer) {
  std::string context;
  for (const std::string& p : passages) {
    if (!context.empty()) context += ' ';
    context += p;
  }
  return format_example(find_task("QA-passages"), question, context, answer);
}

std::size_t max_target_length(const TaskSpec& spec, const Vocab& vocab) {
  if (!spec.labels) {
    throw Error(ErrorCode::kNotClassification, spec.name);
  }
  spec.validate();
  std::size_t longest = 0;
  for (const std::string& label : *spec.labels) {
    longest = std::max(longest, encode(vocab, label).size());
  }
  return longest + 1;
}

std::optional<std::string> decode_label(const TaskSpec& spec,
                                        std::string_view generated) {
  if (!spec.labels) return std::nullopt;
  const std::string cleaned =
      strip_all(strip_all(std::string(generated), "</s>"), "<pad>");
  const std::string_view candidate = trim(cleaned);
  for (const std::string& label : *spec.labels) {
    if (label == candidate) return label;
  }
  return std::nullopt;
}

std::string render_spec_table(const std::vector<TaskSpec>& specs) {
  std::string out = "Task\tPrefix 1\tPrefix 2\tLabels\n";
  for (const TaskSpec& spec : specs) {
    out += spec.name + '\t' + spec.prefix1 + '\t' +
           spec.prefix2.value_or("-") + '\t';
    if (spec.labels) {
      for (std::size_t i = 0; i < spec.labels->size(); ++i) {
        if (i > 0) out += ", ";
        out += (*spec.labels)[i];
      }
    } else {
      out += "-";
    }
    out += '\n';
  }
  return out;
}

}  // namespace t2t

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

#ifndef T2T_MODEL_CONFIG_H_
#define T2T_MODEL_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace t2t {

// Encoder-decoder transformer shape. `num_layers` applies to each stack.
struct ArchConfig {
  std::uint64_t num_layers = 0;
  std::uint64_t num_heads = 0;
  std::uint64_t d_model = 0;
  std::uint64_t d_ff = 0;
  std::uint64_t d_kv = 0;
  std::uint64_t vocab_size = 0;
  std::uint64_t relative_attention_buckets = 32;
  bool tied_lm_head = false;
  bool gated_ffn = true;

  // Throws kInvalidConfig when any dimension is zero.
  void validate() const;
};

// mT5 family dimensions ("small", "base", "large") with the given vocab.
// Throws kInvalidArgument for an unknown family.
ArchConfig family_config(std::string_view family, std::uint64_t vocab_size);

inline constexpr std::uint64_t kMt5VocabSize = 250112;
inline constexpr std::uint64_t kMonolingualVocabSize = 50000;

struct ParamTerm {
  std::string name;
  std::uint64_t count;
};

// Trainable parameters, term by term:
//   token_embedding          vocab * d_model
//   lm_head                  vocab * d_model (untied only)
//   encoder_self_attention   L * 4 * d_model * heads * d_kv     (Q, K, V, O)
//   encoder_ffn              L * (2|3) * d_model * d_ff         (wi[, wi_1], wo)
//   encoder_layer_norms      L * 2 * d_model + d_model (final)
//   decoder_self_attention   L * 4 * d_model * heads * d_kv
//   decoder_cross_attention  L * 4 * d_model * heads * d_kv
//   decoder_ffn              L * (2|3) * d_model * d_ff
//   decoder_layer_norms      L * 3 * d_model + d_model (final)
//   relative_position_bias   2 * buckets * heads (first layer of each stack)
// Layer norms are scale-only and projections carry no bias.
std::vector<ParamTerm> param_breakdown(const ArchConfig& c);
std::uint64_t param_count(const ArchConfig& c);

}  // namespace t2t

#endif  // T2T_MODEL_CONFIG_H_

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

#include "t2t/model_config.h"

#include "t2t/error.h"

namespace t2t {

void ArchConfig::validate() const {
  if (num_layers == 0 || num_heads == 0 || d_model == 0 || d_ff == 0 ||
      d_kv == 0 || vocab_size == 0 || relative_attention_buckets == 0) {
    throw Error(ErrorCode::kInvalidConfig, "all dimensions must be positive");
  }
}

ArchConfig family_config(std::string_view family, std::uint64_t vocab_size) {
  ArchConfig c;
  c.vocab_size = vocab_size;
  c.d_kv = 64;
  if (family == "small") {
    c.num_layers = 8;
    c.num_heads = 6;
    c.d_model = 512;
    c.d_ff = 1024;
  } else if (family == "base") {
    c.num_layers = 12;
    c.num_heads = 12;
    c.d_model = 768;
    c.d_ff = 2048;
  } else if (family == "large") {
    c.num_layers = 24;
    c.num_heads = 16;
    c.d_model = 1024;
    c.d_ff = 2816;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown family '" + std::string(family) + "'");
  }
  return c;
}

std::vector<ParamTerm> param_breakdown(const ArchConfig& c) {
  c.validate();
  const std::uint64_t L = c.num_layers;
  const std::uint64_t embed = c.vocab_size * c.d_model;
  const std::uint64_t attention = 4 * c.d_model * c.num_heads * c.d_kv;
  const std::uint64_t ffn = (c.gated_ffn ? 3 : 2) * c.d_model * c.d_ff;

  return {
      {"token_embedding", embed},
      {"lm_head", c.tied_lm_head ? 0 : embed},
      {"encoder_self_attention", L * attention},
      {"encoder_ffn", L * ffn},
      {"encoder_layer_norms", L * 2 * c.d_model + c.d_model},
      {"decoder_self_attention", L * attention},
      {"decoder_cross_attention", L * attention},
      {"decoder_ffn", L * ffn},
      {"decoder_layer_norms", L * 3 * c.d_model + c.d_model},
      {"relative_position_bias", 2 * c.relative_attention_buckets * c.num_heads},
  };
}

std::uint64_t param_count(const ArchConfig& c) {
  std::uint64_t total = 0;
  for (const ParamTerm& t : param_breakdown(c)) total += t.count;
  return total;
}

}  // namespace t2t

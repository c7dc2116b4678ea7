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

#include "t2t/tuning.h"

#include <cmath>
#include <map>
#include <set>

#include "t2t/error.h"

namespace t2t {

void GeometricSearchConfig::validate() const {
  if (!(start > 0.0) || !std::isfinite(start)) {
    throw Error(ErrorCode::kInvalidConfig, "start must be positive");
  }
  if (!(factor > 1.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::kInvalidConfig, "factor must be > 1");
  }
  if (max_probes < 3) {
    throw Error(ErrorCode::kInvalidConfig, "max_probes must be >= 3");
  }
  if (!objective) {
    throw Error(ErrorCode::kInvalidConfig, "objective is not set");
  }
}

SearchResult geometric_search(const GeometricSearchConfig& cfg) {
  cfg.validate();
  SearchResult result;
  std::map<int, double> cache;

  auto value_at = [&](int step) {
    return cfg.start * std::pow(cfg.factor, static_cast<double>(step));
  };
  auto score_at = [&](int step) {
    if (const auto it = cache.find(step); it != cache.end()) return it->second;
    const double value = value_at(step);
    const double score = cfg.objective(value);
    if (!std::isfinite(score)) throw ObjectiveError(value, score);
    cache.emplace(step, score);
    result.probes.push_back({step, value, score});
    if (result.probes.size() == 1 || score > result.best_score) {
      result.best_score = score;
      result.best_value = value;
    }
    return score;
  };

  std::set<int> visited;
  int center = 0;
  while (true) {
    std::size_t missing = 0;
    for (int s = center - 1; s <= center + 1; ++s) missing += !cache.contains(s);
    if (result.probes.size() + missing > cfg.max_probes) break;

    visited.insert(center);
    ++result.windows;
    const double lo = score_at(center - 1);
    const double mid = score_at(center);
    const double hi = score_at(center + 1);
    if (mid > lo && mid > hi) {
      result.converged = true;
      result.best_value = value_at(center);
      result.best_score = mid;
      break;
    }
    const int next = hi >= lo ? center + 1 : center - 1;
    if (visited.contains(next)) break;
    center = next;
  }
  return result;
}

double lr_at(const ScheduleConfig& cfg, std::uint64_t step) {
  if (!(cfg.peak_lr > 0.0) || cfg.warmup_steps == 0) {
    throw Error(ErrorCode::kInvalidConfig,
                "peak learning rate and warmup steps must be positive");
  }
  if (step < cfg.warmup_steps) return cfg.peak_lr;
  return cfg.peak_lr * std::sqrt(static_cast<double>(cfg.warmup_steps) /
                                 static_cast<double>(step));
}

}  // namespace t2t

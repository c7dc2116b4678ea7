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

#ifndef T2T_TUNING_H_
#define T2T_TUNING_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace t2t {

struct GeometricSearchConfig {
  double start = 4e-4;
  double factor = 2.0;
  std::size_t max_probes = 20;
  // Higher is better. Averaging over seeds is up to the caller.
  std::function<double(double)> objective;

  // Throws kInvalidConfig.
  void validate() const;
};

struct Probe {
  int step;      // value = start * factor^step
  double value;
  double score;
};

struct SearchResult {
  double best_value = 0.0;
  double best_score = 0.0;
  // True when a window's middle beat both neighbours.
  bool converged = false;
  std::size_t windows = 0;
  std::vector<Probe> probes;  // evaluation order
};

// Evaluates {start/f, start, start*f}. Stops when the middle is strictly
// better than both ends; otherwise slides one step toward the better end
// (toward larger values on a tie), evaluating only the new point. Gives up
// with the best value seen when the next window would exceed max_probes or
// would revisit an earlier window.
//
// Throws ObjectiveError on a non-finite objective value.
SearchResult geometric_search(const GeometricSearchConfig& cfg);

struct ScheduleConfig {
  double peak_lr = 5e-3;
  std::uint64_t warmup_steps = 1024;
};

// Constant peak_lr during warmup, then peak_lr * sqrt(warmup / step).
double lr_at(const ScheduleConfig& cfg, std::uint64_t step);

}  // namespace t2t

#endif  // T2T_TUNING_H_

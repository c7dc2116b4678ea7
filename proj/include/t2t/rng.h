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

#ifndef T2T_RNG_H_
#define T2T_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace t2t {

// Seedable generator whose output is identical on every platform.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The std distributions are implementation-defined, so bounded
// integers and unit reals are derived from raw engine output here:
//   uniform_below(n): rejection sampling on the top of the 64-bit range;
//                     draws x until x < 2^64 - (2^64 mod n), returns x mod n.
//   uniform01():      (x >> 11) * 2^-53, a double in [0, 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n). Requires n > 0.
  std::uint64_t uniform_below(std::uint64_t n);

  double uniform01();

  // `k` distinct values from [0, n), sorted ascending (Floyd's algorithm).
  std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n,
                                                        std::uint64_t k);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; a bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t x);

// Per-item seed: mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace t2t

#endif  // T2T_RNG_H_

// Copyright 2026 The pqaoa developers
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

#pragma once

#include <cstdint>

namespace pq {

// splitmix64 step (Steele, Lea, Flood '14): the output of a counter walk,
// used here as a stateless counter-based generator so that every consumer
// derives its own stream and results are reproducible across platforms.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream splitting: child seed = mix of (seed, stream tag). Tags are small
// fixed constants or loop indices; distinct tags give independent streams.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n) by rejection; exact for any n.
  uint64_t next_below(uint64_t n) {
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Fair sign draw in {-1, +1}.
  int next_sign() { return (next_u64() & 1) ? 1 : -1; }

 private:
  uint64_t state_;
};

// Fixed stream tags; instance generation, optimization and sampling never
// share a stream even when handed the same user seed.
namespace stream {
constexpr uint64_t kInstanceWeights = 1;
constexpr uint64_t kOptimizerRestart = 2;
constexpr uint64_t kSampling = 3;
constexpr uint64_t kRqaoaStep = 4;
constexpr uint64_t kBasisSearch = 5;
constexpr uint64_t kInstanceRedraw = 6;
}  // namespace stream

}  // namespace pq

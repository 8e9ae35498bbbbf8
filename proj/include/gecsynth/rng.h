//
// Copyright 2026 The gecsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef GECSYNTH_RNG_H_
#define GECSYNTH_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace gecsynth {

// Seeded random source. The engine's output sequence is fixed by the C++
// standard; the bounded and real-valued draws below are implemented here
// instead of with <random> distributions, whose output is
// implementation-defined, so results are identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  size_t Uniform(size_t n) {
    const uint64_t bound = n;
    const uint64_t threshold = (0 - bound) % bound;
    uint64_t x = Next();
    while (x < threshold) x = Next();
    return static_cast<size_t>(x % bound);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  // Always consumes exactly one draw, so stream positions do not depend on p.
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// 64-bit FNV-1a.
inline uint64_t StableHash(std::string_view bytes) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Seed of the independent stream for (master seed, stream name, item id).
inline uint64_t DeriveSeed(uint64_t master, std::string_view stream,
                           std::string_view item) {
  uint64_t h = SplitMix64(master);
  h = SplitMix64(h ^ StableHash(stream));
  return SplitMix64(h ^ StableHash(item));
}

}  // namespace gecsynth

#endif  // GECSYNTH_RNG_H_

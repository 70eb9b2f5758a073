// Copyright 2026 The hyperiso Authors.
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

// Reproducible random streams.
//
// All sampling in this library is driven by SplitMix64 (Steele, Lea and
// Flood, "Fast splittable pseudorandom number generators", 2014), which is a
// counter-based generator: output i of the stream seeded with s is
// Mix64(s + (i + 1) * kGolden). Integers in [0, bound) use Lemire's
// multiply-shift with rejection and doubles use the top 53 bits, so every
// stream is bit-identical across platforms and easy to reproduce in another
// language.
//
// Trial t of an experiment with base seed b uses DeriveSeed(b, t) =
// Mix64(b ^ Mix64(t + kGolden)).

#ifndef HYPERISO_RANDOM_H_
#define HYPERISO_RANDOM_H_

#include <cstdint>
#include <span>
#include <vector>

namespace hyperiso {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t trial) {
  return Mix64(base ^ Mix64(trial + kGolden));
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += kGolden;
    return Mix64(state_);
  }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>((*this)() >> 11) * 0x1p-53; }

 private:
  std::uint64_t state_;
};

// Fisher-Yates, swapping position i with Below(i + 1) for i = size-1 .. 1.
template <typename T>
void Shuffle(SplitMix64& rng, std::span<T> items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.Below(i);
    std::swap(items[i - 1], items[j]);
  }
}

// A uniformly random permutation of 0..n-1.
std::vector<std::uint32_t> RandomPermutation(SplitMix64& rng, std::uint32_t n);

}  // namespace hyperiso

#endif  // HYPERISO_RANDOM_H_

/*
 * Copyright 2026 The vqacurate Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef VQACURATE_COMMON_RANDOM_H_
#define VQACURATE_COMMON_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <utility>
#include <vector>

namespace vqacurate {

// SplitMix64 stream. Chosen over the <random> distributions because those
// are implementation-defined; every draw here is specified bit-for-bit so
// seeded runs reproduce across compilers and in the Python oracle scripts
// under tests/oracles/.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();

  // Uniform integer in [0, n) by rejection on the top of the 64-bit range.
  // Requires n > 0.
  std::uint64_t UniformIndex(std::uint64_t n);

  // Uniform double in [0, 1) with 53 bits of precision.
  double UniformDouble();

  // In-place Fisher-Yates: for i = size-1 down to 1, swap(i, UniformIndex(i+1)).
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(UniformIndex(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Seed for an independent stream keyed by (seed, parts...): the first 8
// bytes (little-endian) of SHA-256 over "seed|part1|part2|...".
std::uint64_t DeriveSeed(std::uint64_t seed,
                         std::initializer_list<std::string_view> parts);

}  // namespace vqacurate

#endif  // VQACURATE_COMMON_RANDOM_H_

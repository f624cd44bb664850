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

#ifndef VQACURATE_ANSWERABILITY_FEATURES_H_
#define VQACURATE_ANSWERABILITY_FEATURES_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vqacurate::answerability {

inline constexpr std::uint32_t kFeatureDim = 1u << 18;

// Sparse vector, entries sorted by index with no repeats.
struct FeatureVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  bool operator==(const FeatureVector&) const = default;
};

struct FeatureOptions {
  bool include_options = true;
};

// Feature strings before hashing. With the shared tokenizer applied to each
// text:
//   question unigram  "qu:<tok>"      question bigram  "qb:<tok1> <tok2>"
//   option unigram    "ou:<tok>"      option bigram    "ob:<tok1> <tok2>"
// Option bigrams never cross option boundaries.
std::vector<std::string> FeatureStrings(std::string_view question,
                                        const std::array<std::string, 4>& options,
                                        const FeatureOptions& opts = {});

// Bucket = FNV-1a-64(feature) mod 2^18 (the low 18 bits); the sign is -1 when
// bit 63 of the hash is set, else +1.
std::uint32_t BucketIndex(std::string_view feature);
double BucketSign(std::string_view feature);

// Signed-hash accumulation of FeatureStrings, then L2 normalization.
// Throws PreconditionError on an empty question.
FeatureVector Featurize(std::string_view question,
                        const std::array<std::string, 4>& options,
                        const FeatureOptions& opts = {});

double Dot(const FeatureVector& x, const std::vector<double>& weights);
double SquaredNorm(const FeatureVector& x);

}  // namespace vqacurate::answerability

#endif  // VQACURATE_ANSWERABILITY_FEATURES_H_

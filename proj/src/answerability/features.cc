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

#include "vqacurate/answerability/features.h"

#include <cmath>
#include <map>

#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"
#include "vqacurate/common/text.h"

namespace vqacurate::answerability {

namespace {

void AppendNgrams(std::string_view text, std::string_view unigram_prefix,
                  std::string_view bigram_prefix, std::vector<std::string>& out) {
  const std::vector<std::string> tokens = text::Tokenize(text);
  for (const auto& token : tokens) out.push_back(std::string(unigram_prefix) + token);
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    out.push_back(std::string(bigram_prefix) + tokens[i] + " " + tokens[i + 1]);
  }
}

}  // namespace

std::vector<std::string> FeatureStrings(std::string_view question,
                                        const std::array<std::string, 4>& options,
                                        const FeatureOptions& opts) {
  std::vector<std::string> features;
  AppendNgrams(question, "qu:", "qb:", features);
  if (opts.include_options) {
    for (const auto& option : options) AppendNgrams(option, "ou:", "ob:", features);
  }
  return features;
}

std::uint32_t BucketIndex(std::string_view feature) {
  return static_cast<std::uint32_t>(Fnv1a64(feature) & (kFeatureDim - 1));
}

double BucketSign(std::string_view feature) {
  return (Fnv1a64(feature) >> 63) != 0 ? -1.0 : 1.0;
}

FeatureVector Featurize(std::string_view question,
                        const std::array<std::string, 4>& options,
                        const FeatureOptions& opts) {
  if (text::Trim(question).empty()) {
    throw PreconditionError("cannot featurize an empty question");
  }
  std::map<std::uint32_t, double> buckets;
  for (const std::string& feature : FeatureStrings(question, options, opts)) {
    buckets[BucketIndex(feature)] += BucketSign(feature);
  }
  FeatureVector x;
  double norm_sq = 0.0;
  for (const auto& [index, value] : buckets) {
    if (value == 0.0) continue;  // Collisions with opposite signs cancel.
    x.entries.emplace_back(index, value);
    norm_sq += value * value;
  }
  if (norm_sq > 0.0) {
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& entry : x.entries) entry.second *= inv;
  }
  return x;
}

double Dot(const FeatureVector& x, const std::vector<double>& weights) {
  double sum = 0.0;
  for (const auto& [index, value] : x.entries) sum += weights[index] * value;
  return sum;
}

double SquaredNorm(const FeatureVector& x) {
  double sum = 0.0;
  for (const auto& entry : x.entries) sum += entry.second * entry.second;
  return sum;
}

}  // namespace vqacurate::answerability

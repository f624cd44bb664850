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

#include "vqacurate/eval/bleu.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "vqacurate/common/text.h"

namespace vqacurate::eval {

void FinishBleu1(Bleu1Breakdown& b) {
  if (b.candidate_len == 0) {
    b.precision = 0.0;
    b.brevity_penalty = 1.0;
    b.score = 0.0;
    return;
  }
  const double c = static_cast<double>(b.candidate_len);
  const double r = static_cast<double>(b.reference_len);
  b.precision = static_cast<double>(b.clipped_matches) / c;
  b.brevity_penalty = b.candidate_len > b.reference_len ? 1.0 : std::exp(1.0 - r / c);
  b.score = b.brevity_penalty * b.precision;
}

Bleu1Breakdown SentenceBleu1(const std::string& candidate, const std::string& reference) {
  const auto cand = text::Tokenize(candidate);
  const auto ref = text::Tokenize(reference);
  std::map<std::string, size_t> ref_counts;
  for (const auto& token : ref) ++ref_counts[token];
  std::map<std::string, size_t> cand_counts;
  for (const auto& token : cand) ++cand_counts[token];

  Bleu1Breakdown out;
  out.candidate_len = cand.size();
  out.reference_len = ref.size();
  for (const auto& [token, count] : cand_counts) {
    auto it = ref_counts.find(token);
    if (it != ref_counts.end()) out.clipped_matches += std::min(count, it->second);
  }
  FinishBleu1(out);
  return out;
}

Bleu1Breakdown CorpusBleu1(const std::vector<Bleu1Breakdown>& samples) {
  Bleu1Breakdown out;
  for (const auto& s : samples) {
    out.clipped_matches += s.clipped_matches;
    out.candidate_len += s.candidate_len;
    out.reference_len += s.reference_len;
  }
  FinishBleu1(out);
  return out;
}

}  // namespace vqacurate::eval

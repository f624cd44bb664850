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

#ifndef VQACURATE_EVAL_BLEU_H_
#define VQACURATE_EVAL_BLEU_H_

#include <string>
#include <vector>

namespace vqacurate::eval {

struct Bleu1Breakdown {
  size_t clipped_matches = 0;
  size_t candidate_len = 0;  // c
  size_t reference_len = 0;  // r
  double precision = 0.0;
  double brevity_penalty = 1.0;
  double score = 0.0;
};

// Fills precision, brevity_penalty and score from the three counts. An empty
// candidate scores 0 with brevity_penalty left at 1.
void FinishBleu1(Bleu1Breakdown& breakdown);

// Unigram counts for one candidate/reference pair over text::Tokenize tokens.
Bleu1Breakdown SentenceBleu1(const std::string& candidate, const std::string& reference);

// Sums counts over the corpus, then applies the formula once.
Bleu1Breakdown CorpusBleu1(const std::vector<Bleu1Breakdown>& samples);

}  // namespace vqacurate::eval

#endif  // VQACURATE_EVAL_BLEU_H_

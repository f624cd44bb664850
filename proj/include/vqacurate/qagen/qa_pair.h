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

#ifndef VQACURATE_QAGEN_QA_PAIR_H_
#define VQACURATE_QAGEN_QA_PAIR_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqacurate/common/jsonl.h"

namespace vqacurate::qagen {

// Lifecycle of a pair. A pair's stage only ever moves forward in this order.
enum class Stage {
  kGenerated,
  kKeptByTextFilter,
  kKeptByClassifier,
  kTrain,
  kTestInitial,
  kReviewCandidate,
  kTestClean,
  kRejected,
};

std::string_view StageName(Stage stage);
// Throws DataError on an unknown name.
Stage ParseStage(std::string_view name);

inline constexpr std::array<char, 4> kLetters = {'A', 'B', 'C', 'D'};

// 0..3 for 'A'..'D' (either case), nullopt otherwise.
std::optional<int> LetterIndex(char letter);

struct QAPair {
  std::string pair_id;
  std::string record_id;
  std::string image_ref;
  int question_index = 1;  // 1..5 as written by the generator.
  std::string question;
  std::array<std::string, 4> options;  // Texts for A, B, C, D.
  char answer_letter = 'A';
  Stage stage = Stage::kGenerated;
  // Non-fatal quality markers, e.g. "duplicate_options".
  std::vector<std::string> flags;

  int answer_index() const { return *LetterIndex(answer_letter); }
  const std::string& answer_text() const { return options[answer_index()]; }

  bool operator==(const QAPair&) const = default;
};

// Content hash of (record_id, question, options): first 16 bytes of SHA-256
// over their canonical JSON array, hex encoded.
std::string ComputePairId(std::string_view record_id, std::string_view question,
                          const std::array<std::string, 4>& options);

// Empty when valid; otherwise a description of the first violated invariant.
std::string ValidatePair(const QAPair& pair);

Json ToJson(const QAPair& pair);
// Throws DataError when fields are missing or the pair is invalid.
QAPair PairFromJson(const Json& json);

std::vector<QAPair> ReadPairsFile(const std::string& path);
void WritePairsFile(const std::string& path, const std::vector<QAPair>& pairs);

}  // namespace vqacurate::qagen

#endif  // VQACURATE_QAGEN_QA_PAIR_H_

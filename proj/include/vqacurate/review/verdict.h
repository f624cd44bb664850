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

#ifndef VQACURATE_REVIEW_VERDICT_H_
#define VQACURATE_REVIEW_VERDICT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vqacurate/common/jsonl.h"

namespace vqacurate::review {

// The three manual-verification gates for a test pair.
struct ReviewCriteria {
  bool question_image_answerable = false;  // Related to and answerable from the image.
  bool distractors_adequate = false;       // Distractors hard enough to prevent guessing.
  bool image_quality_ok = false;           // Not a chart, flowchart or figure full of numbers.

  bool AllPass() const {
    return question_image_answerable && distractors_adequate && image_quality_ok;
  }
  bool operator==(const ReviewCriteria&) const = default;
};

struct ReviewVerdict {
  std::uint64_t seq = 0;  // Position in the verdict log, 1-based.
  std::string pair_id;
  std::string annotator;
  ReviewCriteria criteria;
  bool accept = false;  // Always criteria.AllPass() once stored.
  std::string timestamp;  // UTC, ISO 8601.

  bool operator==(const ReviewVerdict&) const = default;
};

Json ToJson(const ReviewVerdict& verdict);
// Throws DataError on missing fields. `accept` is recomputed from criteria.
ReviewVerdict VerdictFromJson(const Json& json);

std::vector<ReviewVerdict> ReadVerdictLog(const std::string& path);

// Outcome for one pair after conflict resolution.
struct ResolvedVerdict {
  bool accept = false;
  int answerable_label = 0;  // 1 = answerable from the image.
  int annotators = 0;

  bool operator==(const ResolvedVerdict&) const = default;
};

// Conflict rule: per (pair, annotator) the latest entry in log order wins;
// across annotators a strict majority decides; ties resolve to reject (and to
// label 0 for answerability).
std::map<std::string, ResolvedVerdict> ResolveVerdicts(
    const std::vector<ReviewVerdict>& log);

}  // namespace vqacurate::review

#endif  // VQACURATE_REVIEW_VERDICT_H_

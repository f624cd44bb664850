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

#ifndef VQACURATE_SPLITTER_SPLITTER_H_
#define VQACURATE_SPLITTER_SPLITTER_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vqacurate/common/jsonl.h"
#include "vqacurate/qagen/qa_pair.h"
#include "vqacurate/review/verdict.h"

namespace vqacurate::splitter {

struct Budgets {
  size_t test_pairs = 50000;
  size_t review_n = 2000;

  bool operator==(const Budgets&) const = default;
};

struct SplitAssignment {
  std::vector<std::string> train;              // Sorted.
  std::vector<std::string> test_initial;       // Sorted.
  std::vector<std::string> review_candidates;  // Presentation order.
  std::vector<std::string> test_clean;         // Sorted.
  std::uint64_t seed = 0;
  Budgets budgets;

  bool operator==(const SplitAssignment&) const = default;
};

Json ToJson(const SplitAssignment& assignment);
SplitAssignment AssignmentFromJson(const Json& json);

// Grouping key for disjointness: image_ref when set, else record_id.
std::string ImageKey(const qagen::QAPair& pair);

// Shuffles the sorted image keys with the seed and moves whole images into
// test until the test pair count first reaches or exceeds
// budgets.test_pairs; the rest is train. Independent of input order.
// Throws PreconditionError when budgets.test_pairs >= pairs.size() and
// DataError on repeated pair ids.
SplitAssignment SplitTrainTest(const std::vector<qagen::QAPair>& pairs,
                               const Budgets& budgets, std::uint64_t seed);

// Seeded uniform sample of budgets.review_n test pairs, in sampled order.
// review_n is clamped to |test_initial| with a warning. Throws
// PreconditionError when test_initial is empty.
SplitAssignment SampleForReview(SplitAssignment assignment, std::uint64_t seed);

struct FinalizeReport {
  size_t resolved = 0;
  size_t accepted = 0;
  size_t unresolved = 0;
  double retention_rate = 0.0;  // accepted / resolved, 0 when none resolved.
};

// test_clean = review candidates whose resolved verdict is accept.
// Unresolved candidates that are not in `skipped` raise PreconditionError
// listing them in strict mode; otherwise they are left out of test_clean.
SplitAssignment FinalizeCleanTest(SplitAssignment assignment,
                                  const std::vector<review::ReviewVerdict>& verdicts,
                                  bool strict, const std::set<std::string>& skipped,
                                  FinalizeReport* report = nullptr);

}  // namespace vqacurate::splitter

#endif  // VQACURATE_SPLITTER_SPLITTER_H_

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

#include "vqacurate/splitter/splitter.h"

#include <algorithm>
#include <map>

#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/random.h"

namespace vqacurate::splitter {

Json ToJson(const SplitAssignment& assignment) {
  return Json{{"train", assignment.train},
              {"test_initial", assignment.test_initial},
              {"review_candidates", assignment.review_candidates},
              {"test_clean", assignment.test_clean},
              {"seed", assignment.seed},
              {"budgets",
               {{"test_pairs", assignment.budgets.test_pairs},
                {"review_n", assignment.budgets.review_n}}}};
}

SplitAssignment AssignmentFromJson(const Json& json) {
  try {
    SplitAssignment a;
    a.train = json.at("train").get<std::vector<std::string>>();
    a.test_initial = json.at("test_initial").get<std::vector<std::string>>();
    a.review_candidates = json.at("review_candidates").get<std::vector<std::string>>();
    a.test_clean = json.at("test_clean").get<std::vector<std::string>>();
    a.seed = json.at("seed").get<std::uint64_t>();
    a.budgets.test_pairs = json.at("budgets").at("test_pairs").get<size_t>();
    a.budgets.review_n = json.at("budgets").at("review_n").get<size_t>();
    return a;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed split assignment: ") + e.what());
  }
}

std::string ImageKey(const qagen::QAPair& pair) {
  return pair.image_ref.empty() ? "record:" + pair.record_id : "image:" + pair.image_ref;
}

SplitAssignment SplitTrainTest(const std::vector<qagen::QAPair>& pairs,
                               const Budgets& budgets, std::uint64_t seed) {
  if (budgets.test_pairs >= pairs.size()) {
    throw PreconditionError("test budget " + std::to_string(budgets.test_pairs) +
                            " must be below the pair count " +
                            std::to_string(pairs.size()));
  }
  std::map<std::string, std::vector<std::string>> by_image;
  std::set<std::string> ids;
  for (const auto& pair : pairs) {
    if (!ids.insert(pair.pair_id).second) {
      throw DataError("pair id '" + pair.pair_id + "' appears twice");
    }
    by_image[ImageKey(pair)].push_back(pair.pair_id);
  }
  std::vector<std::string> images;
  images.reserve(by_image.size());
  for (const auto& entry : by_image) images.push_back(entry.first);
  Rng rng(DeriveSeed(seed, {"split-images"}));
  rng.Shuffle(images);

  SplitAssignment assignment;
  assignment.seed = seed;
  assignment.budgets = budgets;
  size_t test_count = 0;
  for (const auto& image : images) {
    const auto& members = by_image[image];
    if (test_count < budgets.test_pairs) {
      assignment.test_initial.insert(assignment.test_initial.end(), members.begin(),
                                     members.end());
      test_count += members.size();
    } else {
      assignment.train.insert(assignment.train.end(), members.begin(), members.end());
    }
  }
  std::sort(assignment.train.begin(), assignment.train.end());
  std::sort(assignment.test_initial.begin(), assignment.test_initial.end());
  return assignment;
}

SplitAssignment SampleForReview(SplitAssignment assignment, std::uint64_t seed) {
  if (assignment.test_initial.empty()) {
    throw PreconditionError("cannot sample review candidates from an empty test set");
  }
  size_t n = assignment.budgets.review_n;
  if (n > assignment.test_initial.size()) {
    spdlog::warn("review_n {} exceeds the {} test pairs; clamping", n,
                 assignment.test_initial.size());
    n = assignment.test_initial.size();
  }
  std::vector<std::string> pool = assignment.test_initial;
  Rng rng(DeriveSeed(seed, {"review-sample"}));
  rng.Shuffle(pool);
  pool.resize(n);
  assignment.review_candidates = std::move(pool);
  return assignment;
}

SplitAssignment FinalizeCleanTest(SplitAssignment assignment,
                                  const std::vector<review::ReviewVerdict>& verdicts,
                                  bool strict, const std::set<std::string>& skipped,
                                  FinalizeReport* report) {
  const auto resolved = review::ResolveVerdicts(verdicts);
  FinalizeReport local;
  std::vector<std::string> unresolved;
  assignment.test_clean.clear();
  for (const auto& id : assignment.review_candidates) {
    auto it = resolved.find(id);
    if (it == resolved.end()) {
      if (!skipped.contains(id)) unresolved.push_back(id);
      continue;
    }
    ++local.resolved;
    if (it->second.accept) {
      ++local.accepted;
      assignment.test_clean.push_back(id);
    }
  }
  local.unresolved = unresolved.size();
  if (strict && !unresolved.empty()) {
    std::string list;
    for (const auto& id : unresolved) list += (list.empty() ? "" : ", ") + id;
    throw PreconditionError(std::to_string(unresolved.size()) +
                            " review candidates lack a verdict: " + list);
  }
  if (!unresolved.empty()) {
    spdlog::warn("{} review candidates lack a verdict and are left out of test_clean",
                 unresolved.size());
  }
  std::sort(assignment.test_clean.begin(), assignment.test_clean.end());
  local.retention_rate =
      local.resolved == 0 ? 0.0
                          : static_cast<double>(local.accepted) /
                                static_cast<double>(local.resolved);
  spdlog::info("clean test: {} of {} reviewed pairs retained ({:.1f}%; full-scale "
               "reference: over 80%)",
               local.accepted, local.resolved, 100.0 * local.retention_rate);
  if (report != nullptr) *report = local;
  return assignment;
}

}  // namespace vqacurate::splitter

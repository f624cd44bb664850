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

#include "vqacurate/review/verdict.h"

#include "vqacurate/common/error.h"

namespace vqacurate::review {

Json ToJson(const ReviewVerdict& verdict) {
  return Json{{"seq", verdict.seq},
              {"pair_id", verdict.pair_id},
              {"annotator", verdict.annotator},
              {"criteria",
               {{"question_image_answerable", verdict.criteria.question_image_answerable},
                {"distractors_adequate", verdict.criteria.distractors_adequate},
                {"image_quality_ok", verdict.criteria.image_quality_ok}}},
              {"accept", verdict.accept},
              {"timestamp", verdict.timestamp}};
}

ReviewVerdict VerdictFromJson(const Json& json) {
  try {
    ReviewVerdict verdict;
    verdict.seq = json.value("seq", std::uint64_t{0});
    verdict.pair_id = json.at("pair_id").get<std::string>();
    verdict.annotator = json.at("annotator").get<std::string>();
    const Json& criteria = json.at("criteria");
    verdict.criteria.question_image_answerable =
        criteria.at("question_image_answerable").get<bool>();
    verdict.criteria.distractors_adequate = criteria.at("distractors_adequate").get<bool>();
    verdict.criteria.image_quality_ok = criteria.at("image_quality_ok").get<bool>();
    verdict.accept = verdict.criteria.AllPass();
    verdict.timestamp = json.value("timestamp", "");
    return verdict;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed verdict: ") + e.what());
  }
}

std::vector<ReviewVerdict> ReadVerdictLog(const std::string& path) {
  std::vector<ReviewVerdict> log;
  for (const Json& row : ReadJsonlFile(path)) log.push_back(VerdictFromJson(row));
  return log;
}

std::map<std::string, ResolvedVerdict> ResolveVerdicts(
    const std::vector<ReviewVerdict>& log) {
  // Latest entry per (pair, annotator); log order is authoritative.
  std::map<std::string, std::map<std::string, const ReviewVerdict*>> latest;
  for (const auto& verdict : log) latest[verdict.pair_id][verdict.annotator] = &verdict;

  std::map<std::string, ResolvedVerdict> resolved;
  for (const auto& [pair_id, by_annotator] : latest) {
    int accepts = 0;
    int answerable = 0;
    const int n = static_cast<int>(by_annotator.size());
    for (const auto& [annotator, verdict] : by_annotator) {
      if (verdict->criteria.AllPass()) ++accepts;
      if (verdict->criteria.question_image_answerable) ++answerable;
    }
    resolved[pair_id] = {2 * accepts > n, 2 * answerable > n ? 1 : 0, n};
  }
  return resolved;
}

}  // namespace vqacurate::review

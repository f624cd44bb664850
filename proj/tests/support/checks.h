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

#ifndef VQACURATE_TESTS_SUPPORT_CHECKS_H_
#define VQACURATE_TESTS_SUPPORT_CHECKS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace vqacurate::checks {

// Outcome of one acceptance criterion. `detail` names what was measured, or
// the first violation.
struct CheckResult {
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Independent matcher used as the oracle: enumerates every (i, j, k) to find
// the longest block, earliest in a then b, and recurses on both sides.
std::size_t BruteForceMatched(const std::u32string& a, const std::u32string& b);

CheckResult SimilarityOracle(std::size_t cases = 10000);
CheckResult BleuHandCases();
CheckResult TextFilterDismissalRate(std::size_t pairs = 10000);
CheckResult FilterThresholdPatterns();
CheckResult ParserFixtureCorpus();
CheckResult SplitProperties(std::size_t corpora = 500);
CheckResult ClassifierNumerics();
CheckResult BootstrapBehaviour();
CheckResult EndToEndDeterminism();
CheckResult StatsOracle();

struct Criterion {
  std::string name;
  CheckResult (*run)();
  double max_seconds = 0.0;  // 0 = no runtime bound.
};
const std::vector<Criterion>& AllCriteria();

// All regular files under `root`, relative, sorted. Files inside a
// "telemetry" directory are skipped.
std::vector<std::filesystem::path> ListStageFiles(const std::filesystem::path& root);

}  // namespace vqacurate::checks

#endif  // VQACURATE_TESTS_SUPPORT_CHECKS_H_

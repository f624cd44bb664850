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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "checks.h"
#include "spdlog/spdlog.h"

int main() {
  spdlog::set_level(spdlog::level::err);
  int failures = 0;
  const auto& criteria = vqacurate::checks::AllCriteria();
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    auto result = criterion.run();
    if (result.pass && criterion.max_seconds > 0 && result.seconds > criterion.max_seconds) {
      result.pass = false;
      result.detail += " (took longer than the time bound)";
    }
    if (!result.pass) ++failures;
    std::printf("%s [%zu] %s: %s (%.2fs)\n", result.pass ? "PASS" : "FAIL", i + 1,
                criterion.name.c_str(), result.detail.c_str(), result.seconds);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

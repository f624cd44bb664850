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

#include "test_util.h"

#include <atomic>
#include <unistd.h>

namespace vqacurate::testing {

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("vqacurate-" + tag + "-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

qagen::QAPair MakePair(const std::string& record_id, const std::string& question,
                       std::array<std::string, 4> options, char answer,
                       const std::string& image_ref) {
  qagen::QAPair pair;
  pair.record_id = record_id;
  pair.image_ref = image_ref;
  pair.question = question;
  pair.options = std::move(options);
  pair.answer_letter = answer;
  pair.pair_id = qagen::ComputePairId(record_id, question, pair.options);
  return pair;
}

}  // namespace vqacurate::testing

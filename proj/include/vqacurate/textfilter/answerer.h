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

#ifndef VQACURATE_TEXTFILTER_ANSWERER_H_
#define VQACURATE_TEXTFILTER_ANSWERER_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqacurate/qagen/qa_pair.h"

namespace vqacurate::textfilter {

// One multiple-choice query to a text-only model. `pair_id` and
// `trial_index` identify the query; they are forwarded so seeded test
// doubles can draw independent answers per trial. Real backends ignore them.
struct AnswerRequest {
  std::string_view pair_id;
  int trial_index = 0;
  std::string_view question;
  const std::array<std::string, 4>* options = nullptr;  // Lettered A-D.
};

struct AnswerResult {
  std::optional<char> letter;  // nullopt = abstain.
  bool transport_failure = false;
  std::string error;
};

// A text-only multiple-choice answerer. Implementations must be thread-safe.
class Answerer {
 public:
  virtual ~Answerer() = default;
  virtual std::string id() const = 0;
  virtual AnswerResult Answer(const AnswerRequest& request) = 0;
};

// Knows the gold option text of each pair and always picks it.
class OracleAnswerer : public Answerer {
 public:
  explicit OracleAnswerer(const std::vector<qagen::QAPair>& pairs);
  std::string id() const override { return "oracle"; }
  AnswerResult Answer(const AnswerRequest& request) override;

 private:
  std::map<std::string, std::string, std::less<>> gold_text_;
};

class ConstantAnswerer : public Answerer {
 public:
  explicit ConstantAnswerer(char letter) : letter_(letter) {}
  std::string id() const override { return std::string("constant:") + letter_; }
  AnswerResult Answer(const AnswerRequest&) override { return {letter_, false, ""}; }

 private:
  char letter_;
};

class AbstainAnswerer : public Answerer {
 public:
  std::string id() const override { return "abstain"; }
  AnswerResult Answer(const AnswerRequest&) override { return {}; }
};

// Picks each letter with probability 1/4, independently per
// (pair_id, trial_index), reproducibly from the seed.
class UniformRandomAnswerer : public Answerer {
 public:
  explicit UniformRandomAnswerer(std::uint64_t seed) : seed_(seed) {}
  std::string id() const override { return "uniform:" + std::to_string(seed_); }
  AnswerResult Answer(const AnswerRequest& request) override;

 private:
  std::uint64_t seed_;
};

// Wire contract:
//   POST <url>  {"question": str, "options": [{"letter": "A", "text": str} x4]}
//   200 ->      {"letter": "A"|"B"|"C"|"D"|null}
// A null or missing letter is an abstention. Transport errors and non-200
// statuses are retried `max_retries` times, then reported as a transport
// failure.
class HttpAnswerer : public Answerer {
 public:
  HttpAnswerer(std::string url, int timeout_seconds = 30, int max_retries = 2);
  std::string id() const override { return "http:" + url_; }
  AnswerResult Answer(const AnswerRequest& request) override;

 private:
  std::string url_;
  int timeout_seconds_;
  int max_retries_;
};

}  // namespace vqacurate::textfilter

#endif  // VQACURATE_TEXTFILTER_ANSWERER_H_

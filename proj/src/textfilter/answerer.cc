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

#include "vqacurate/textfilter/answerer.h"

#include "httplib.h"
#include "vqacurate/common/random.h"
#include "vqacurate/qagen/client.h"

namespace vqacurate::textfilter {

OracleAnswerer::OracleAnswerer(const std::vector<qagen::QAPair>& pairs) {
  for (const auto& pair : pairs) gold_text_[pair.pair_id] = pair.answer_text();
}

AnswerResult OracleAnswerer::Answer(const AnswerRequest& request) {
  auto it = gold_text_.find(request.pair_id);
  if (it == gold_text_.end()) return {};
  for (size_t i = 0; i < 4; ++i) {
    if ((*request.options)[i] == it->second) return {qagen::kLetters[i], false, ""};
  }
  return {};
}

AnswerResult UniformRandomAnswerer::Answer(const AnswerRequest& request) {
  Rng rng(DeriveSeed(seed_, {"uniform-answerer", request.pair_id,
                             std::to_string(request.trial_index)}));
  return {qagen::kLetters[rng.UniformIndex(4)], false, ""};
}

HttpAnswerer::HttpAnswerer(std::string url, int timeout_seconds, int max_retries)
    : url_(std::move(url)),
      timeout_seconds_(timeout_seconds),
      max_retries_(max_retries) {
  qagen::SplitUrl(url_);
}

AnswerResult HttpAnswerer::Answer(const AnswerRequest& request) {
  const auto [origin, path] = qagen::SplitUrl(url_);
  Json options = Json::array();
  for (size_t i = 0; i < 4; ++i) {
    options.push_back({{"letter", std::string(1, qagen::kLetters[i])},
                       {"text", (*request.options)[i]}});
  }
  const std::string body =
      Json{{"question", request.question}, {"options", options}}.dump();

  std::string last_error;
  for (int attempt = 0; attempt <= max_retries_; ++attempt) {
    httplib::Client client(origin);
    client.set_connection_timeout(timeout_seconds_, 0);
    client.set_read_timeout(timeout_seconds_, 0);
    auto result = client.Post(path, body, "application/json");
    if (!result) {
      last_error = "transport error: " + httplib::to_string(result.error());
      continue;
    }
    if (result->status != 200) {
      last_error = "HTTP " + std::to_string(result->status);
      continue;
    }
    try {
      const Json reply = Json::parse(result->body);
      const auto it = reply.find("letter");
      if (it == reply.end() || it->is_null()) return {};
      const std::string letter = it->get<std::string>();
      if (letter.size() == 1 && qagen::LetterIndex(letter[0])) {
        return {static_cast<char>(std::toupper(letter[0])), false, ""};
      }
      return {};  // Unreadable letter counts as abstention.
    } catch (const Json::exception& e) {
      last_error = std::string("malformed reply: ") + e.what();
    }
  }
  return {std::nullopt, true, last_error};
}

}  // namespace vqacurate::textfilter

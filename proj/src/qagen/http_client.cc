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

#include <cstdlib>

#include "httplib.h"
#include "vqacurate/common/error.h"
#include "vqacurate/qagen/client.h"

namespace vqacurate::qagen {

HttpGenerationClient::HttpGenerationClient(HttpClientConfig config)
    : config_(std::move(config)) {
  SplitUrl(config_.url);  // Validate eagerly.
}

std::string HttpGenerationClient::backend_id() const {
  return "http:" + config_.url;
}

ClientResponse HttpGenerationClient::Complete(std::string_view prompt,
                                              const GenerationParams& params) {
  const auto [origin, path] = SplitUrl(config_.url);
  httplib::Client client(origin);
  client.set_connection_timeout(config_.timeout_seconds, 0);
  client.set_read_timeout(config_.timeout_seconds, 0);
  client.set_write_timeout(config_.timeout_seconds, 0);

  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env.c_str());
      key != nullptr && *key != '\0') {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  const Json body = {
      {"model", params.model},
      {"temperature", params.temperature},
      {"max_tokens", params.max_tokens},
      {"messages", Json::array({{{"role", "user"}, {"content", prompt}}})}};

  auto result = client.Post(path, headers, body.dump(), "application/json");
  if (!result) {
    return ClientResponse::Transient("transport error: " +
                                     httplib::to_string(result.error()));
  }
  const int status = result->status;
  if (status == 429 || (status >= 500 && status <= 599)) {
    return ClientResponse::Transient("HTTP " + std::to_string(status));
  }
  if (status != 200) {
    return ClientResponse::Permanent("HTTP " + std::to_string(status));
  }
  try {
    const Json envelope = Json::parse(result->body);
    return ClientResponse::Ok(envelope.at("choices")
                                  .at(0)
                                  .at("message")
                                  .at("content")
                                  .get<std::string>());
  } catch (const Json::exception& e) {
    return ClientResponse::Permanent(std::string("malformed response envelope: ") +
                                     e.what());
  }
}

}  // namespace vqacurate::qagen

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

#ifndef VQACURATE_QAGEN_CLIENT_H_
#define VQACURATE_QAGEN_CLIENT_H_

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vqacurate/common/jsonl.h"
#include "vqacurate/corpus/corpus.h"

namespace vqacurate::qagen {

struct GenerationParams {
  std::string model = "gpt-3.5-turbo";
  double temperature = 0.7;
  int max_tokens = 1024;
};

Json ToJson(const GenerationParams& params);

struct ClientResponse {
  enum class Status { kOk, kTransient, kPermanent };

  Status status = Status::kOk;
  std::string text;
  std::string error;

  static ClientResponse Ok(std::string text) {
    return {Status::kOk, std::move(text), ""};
  }
  static ClientResponse Transient(std::string error) {
    return {Status::kTransient, "", std::move(error)};
  }
  static ClientResponse Permanent(std::string error) {
    return {Status::kPermanent, "", std::move(error)};
  }
};

// A text-completion backend. Implementations must be safe to call from
// several threads at once.
class GenerationClient {
 public:
  virtual ~GenerationClient() = default;
  virtual std::string backend_id() const = 0;
  virtual ClientResponse Complete(std::string_view prompt,
                                  const GenerationParams& params) = 0;
};

struct RetryPolicy {
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{30000};
  std::function<void(std::chrono::milliseconds)> sleep;  // Defaults to sleep_for.
};

struct RawGeneration {
  std::string record_id;
  std::string backend_id;
  std::string response_text;
  std::string request_fingerprint;
  bool failed = false;
  std::string failure_reason;
  int retries = 0;

  bool operator==(const RawGeneration&) const = default;
};

Json ToJson(const RawGeneration& generation);
RawGeneration RawGenerationFromJson(const Json& json);

// SHA-256 hex over the canonical JSON of (backend_id, prompt, params).
std::string RequestFingerprint(std::string_view backend_id,
                               std::string_view prompt,
                               const GenerationParams& params);

// One request for one record. Transient failures are retried with
// exponential backoff up to policy.max_retries; permanent failures and
// exhausted retries produce a failure-marked generation with empty text.
RawGeneration Generate(GenerationClient& client,
                       const corpus::ImageCaptionRecord& record,
                       const GenerationParams& params, const RetryPolicy& policy);

// Generates for every record with at most `concurrency` requests in flight.
// The result is in the order of `records`.
std::vector<RawGeneration> GenerateAll(
    GenerationClient& client,
    const std::vector<corpus::ImageCaptionRecord>& records,
    const GenerationParams& params, const RetryPolicy& policy,
    size_t concurrency = 8);

// Seeded deterministic backend emitting template-conformant text derived from
// the caption. A fixed share of responses exercises the malformations real
// chat models produce: repeated questions, refusal halfway through, full
// refusal, loose formatting and truncated blocks.
class MockGenerationClient : public GenerationClient {
 public:
  explicit MockGenerationClient(std::uint64_t seed) : seed_(seed) {}

  std::string backend_id() const override;
  ClientResponse Complete(std::string_view prompt,
                          const GenerationParams& params) override;

 private:
  std::uint64_t seed_;
};

struct HttpClientConfig {
  // Full endpoint URL of an OpenAI-style chat completions API.
  std::string url = "http://127.0.0.1:8000/v1/chat/completions";
  // Name of the environment variable holding the bearer token; the token is
  // never stored in configuration files.
  std::string api_key_env = "VQACURATE_API_KEY";
  int timeout_seconds = 60;
};

// POSTs {model, temperature, max_tokens, messages:[{role:user, content}]}
// and reads choices[0].message.content. Connection errors, 429 and 5xx are
// transient; other statuses and malformed envelopes are permanent.
class HttpGenerationClient : public GenerationClient {
 public:
  explicit HttpGenerationClient(HttpClientConfig config);

  std::string backend_id() const override;
  ClientResponse Complete(std::string_view prompt,
                          const GenerationParams& params) override;

 private:
  HttpClientConfig config_;
};

// Splits "scheme://host[:port]/path" into ("scheme://host[:port]", "/path").
// Throws UsageError on malformed URLs.
std::pair<std::string, std::string> SplitUrl(std::string_view url);

}  // namespace vqacurate::qagen

#endif  // VQACURATE_QAGEN_CLIENT_H_

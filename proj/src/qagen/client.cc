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

#include "vqacurate/qagen/client.h"

#include <algorithm>
#include <thread>

#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"
#include "vqacurate/common/parallel.h"
#include "vqacurate/qagen/prompt.h"

namespace vqacurate::qagen {

Json ToJson(const GenerationParams& params) {
  return Json{{"model", params.model},
              {"temperature", params.temperature},
              {"max_tokens", params.max_tokens}};
}

Json ToJson(const RawGeneration& generation) {
  return Json{{"record_id", generation.record_id},
              {"backend_id", generation.backend_id},
              {"response_text", generation.response_text},
              {"request_fingerprint", generation.request_fingerprint},
              {"failed", generation.failed},
              {"failure_reason", generation.failure_reason},
              {"retries", generation.retries}};
}

RawGeneration RawGenerationFromJson(const Json& json) {
  try {
    RawGeneration generation;
    generation.record_id = json.at("record_id").get<std::string>();
    generation.backend_id = json.at("backend_id").get<std::string>();
    generation.response_text = json.at("response_text").get<std::string>();
    generation.request_fingerprint =
        json.at("request_fingerprint").get<std::string>();
    generation.failed = json.value("failed", false);
    generation.failure_reason = json.value("failure_reason", "");
    generation.retries = json.value("retries", 0);
    return generation;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed generation record: ") + e.what());
  }
}

std::string RequestFingerprint(std::string_view backend_id,
                               std::string_view prompt,
                               const GenerationParams& params) {
  const Json key = {{"backend_id", backend_id},
                    {"prompt", prompt},
                    {"params", ToJson(params)}};
  return Sha256Hex(CanonicalDump(key));
}

RawGeneration Generate(GenerationClient& client,
                       const corpus::ImageCaptionRecord& record,
                       const GenerationParams& params, const RetryPolicy& policy) {
  RawGeneration generation;
  generation.record_id = record.record_id;
  generation.backend_id = client.backend_id();
  const std::string prompt = BuildPrompt(record.caption);
  generation.request_fingerprint =
      RequestFingerprint(generation.backend_id, prompt, params);

  auto backoff = policy.initial_backoff;
  for (int attempt = 0;; ++attempt) {
    ClientResponse response;
    try {
      response = client.Complete(prompt, params);
    } catch (const std::exception& e) {
      response = ClientResponse::Permanent(std::string("client threw: ") + e.what());
    }
    if (response.status == ClientResponse::Status::kOk) {
      generation.response_text = std::move(response.text);
      generation.retries = attempt;
      return generation;
    }
    if (response.status == ClientResponse::Status::kPermanent ||
        attempt >= policy.max_retries) {
      generation.failed = true;
      generation.retries = attempt;
      generation.failure_reason =
          response.status == ClientResponse::Status::kPermanent
              ? response.error
              : "retries exhausted: " + response.error;
      spdlog::warn("generation failed for {}: {}", record.record_id,
                   generation.failure_reason);
      return generation;
    }
    if (policy.sleep) {
      policy.sleep(backoff);
    } else {
      std::this_thread::sleep_for(backoff);
    }
    backoff = std::min(
        policy.max_backoff,
        std::chrono::milliseconds(static_cast<long long>(
            static_cast<double>(backoff.count()) * policy.multiplier)));
  }
}

std::vector<RawGeneration> GenerateAll(
    GenerationClient& client,
    const std::vector<corpus::ImageCaptionRecord>& records,
    const GenerationParams& params, const RetryPolicy& policy,
    size_t concurrency) {
  std::vector<RawGeneration> out(records.size());
  ParallelFor(records.size(), concurrency, [&](size_t i) {
    out[i] = Generate(client, records[i], params, policy);
  });
  return out;
}

std::pair<std::string, std::string> SplitUrl(std::string_view url) {
  const size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw UsageError("URL lacks a scheme: " + std::string(url));
  }
  const std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw UsageError("unsupported URL scheme: " + std::string(url));
  }
  const size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == scheme_end + 3) {
    throw UsageError("URL lacks a host: " + std::string(url));
  }
  if (path_start == std::string_view::npos) {
    return {std::string(url), "/"};
  }
  return {std::string(url.substr(0, path_start)),
          std::string(url.substr(path_start))};
}

}  // namespace vqacurate::qagen

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

#ifndef VQACURATE_REVIEW_REVIEW_STORE_H_
#define VQACURATE_REVIEW_REVIEW_STORE_H_

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vqacurate/answerability/classifier.h"
#include "vqacurate/common/jsonl.h"
#include "vqacurate/qagen/qa_pair.h"
#include "vqacurate/review/verdict.h"

namespace vqacurate::review {

using TimePoint = std::chrono::system_clock::time_point;

// UTC, second precision, e.g. "2026-01-31T12:00:00Z".
std::string FormatTimestamp(TimePoint t);

struct Lease {
  std::string annotator;
  TimePoint expires_at;
};

struct ReviewTask {
  qagen::QAPair pair;
  std::string image_url;
  std::optional<Lease> lease;
};

// Includes the gold letter; annotators judge the pair, they do not answer it.
Json ToJson(const ReviewTask& task);

// "/media/<percent-encoded image_ref>", or the ref itself when it is already
// an http(s) URL.
std::string MediaUrl(const std::string& image_ref);

struct Progress {
  size_t total = 0;
  size_t resolved = 0;
  size_t accepted = 0;
  std::optional<double> retention_rate;  // Unset when nothing is resolved.
};

Json ToJson(const Progress& progress);

// Review queue over a fixed candidate list, persisted as an append-only JSONL
// verdict log. The log is replayed on construction, so reopening a store
// reproduces its resolved state. Mutations are serialized; readers work on
// immutable snapshots.
class ReviewStore {
 public:
  using Clock = std::function<TimePoint()>;

  struct Options {
    std::chrono::seconds lease_timeout{600};
    Clock clock = [] { return std::chrono::system_clock::now(); };
  };

  // Candidates keep their given order. DataError on repeated pair ids or a
  // malformed log; log entries for unknown pairs are kept but ignored.
  ReviewStore(std::vector<qagen::QAPair> candidates, std::filesystem::path log_path,
              Options options);
  ReviewStore(std::vector<qagen::QAPair> candidates, std::filesystem::path log_path)
      : ReviewStore(std::move(candidates), std::move(log_path), Options()) {}

  // Earliest candidate with no verdict and no live lease held by someone
  // else. An annotator asking again gets the task they already hold.
  // PreconditionError on an empty annotator name.
  std::optional<ReviewTask> NextTask(const std::string& annotator);

  // Appends a verdict; accept is recomputed from the criteria. NotFoundError
  // for a pair outside the candidates, PreconditionError for an empty
  // annotator name.
  ReviewVerdict SubmitVerdict(const std::string& pair_id, const std::string& annotator,
                              const ReviewCriteria& criteria);

  Progress GetProgress() const;

  // Resolved candidates in candidate order with the answerability label.
  std::vector<answerability::LabeledPair> ExportLabels() const;

  std::vector<ReviewVerdict> Log() const;
  std::map<std::string, ResolvedVerdict> Resolved() const;

 private:
  struct Snapshot {
    std::vector<ReviewVerdict> log;
    std::map<std::string, ResolvedVerdict> resolved;
  };

  std::shared_ptr<const Snapshot> Current() const;

  std::vector<qagen::QAPair> candidates_;
  std::map<std::string, size_t> index_;
  std::filesystem::path log_path_;
  Options options_;

  std::mutex write_mutex_;
  std::map<std::string, Lease> leases_;  // Guarded by write_mutex_.
  std::shared_ptr<const Snapshot> snapshot_;  // Atomic load/store only.
};

}  // namespace vqacurate::review

#endif  // VQACURATE_REVIEW_REVIEW_STORE_H_

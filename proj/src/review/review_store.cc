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

#include "vqacurate/review/review_store.h"

#include <ctime>
#include <fstream>

#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"

namespace vqacurate::review {

std::string FormatTimestamp(TimePoint t) {
  const std::time_t seconds = std::chrono::system_clock::to_time_t(t);
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string MediaUrl(const std::string& image_ref) {
  if (image_ref.starts_with("http://") || image_ref.starts_with("https://")) return image_ref;
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string url = "/media/";
  for (unsigned char c : image_ref) {
    const bool keep = std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~' ||
                      c == '/';
    if (keep) {
      url += static_cast<char>(c);
    } else {
      url += '%';
      url += kHex[c >> 4];
      url += kHex[c & 15];
    }
  }
  return url;
}

Json ToJson(const ReviewTask& task) {
  Json options = Json::array();
  for (size_t k = 0; k < 4; ++k) {
    options.push_back({{"letter", std::string(1, qagen::kLetters[k])},
                       {"text", task.pair.options[k]}});
  }
  Json lease;
  if (task.lease) {
    lease = {{"annotator", task.lease->annotator},
             {"expires_at", FormatTimestamp(task.lease->expires_at)}};
  }
  return Json{{"pair_id", task.pair.pair_id},
              {"record_id", task.pair.record_id},
              {"image_ref", task.pair.image_ref},
              {"image_url", task.image_url},
              {"question", task.pair.question},
              {"options", std::move(options)},
              {"answer_letter", std::string(1, task.pair.answer_letter)},
              {"lease", std::move(lease)}};
}

Json ToJson(const Progress& progress) {
  return Json{{"total", progress.total},
              {"resolved", progress.resolved},
              {"accepted", progress.accepted},
              {"retention_rate",
               progress.retention_rate ? Json(*progress.retention_rate) : Json()}};
}

ReviewStore::ReviewStore(std::vector<qagen::QAPair> candidates, std::filesystem::path log_path,
                         Options options)
    : candidates_(std::move(candidates)),
      log_path_(std::move(log_path)),
      options_(std::move(options)) {
  for (size_t i = 0; i < candidates_.size(); ++i) {
    if (!index_.emplace(candidates_[i].pair_id, i).second) {
      throw DataError("review candidate '" + candidates_[i].pair_id + "' appears twice");
    }
  }
  auto snapshot = std::make_shared<Snapshot>();
  if (std::filesystem::exists(log_path_)) {
    snapshot->log = ReadVerdictLog(log_path_.string());
    for (const auto& verdict : snapshot->log) {
      if (!index_.contains(verdict.pair_id)) {
        spdlog::warn("verdict log names '{}', which is not a review candidate",
                     verdict.pair_id);
      }
    }
  }
  snapshot->resolved = ResolveVerdicts(snapshot->log);
  std::erase_if(snapshot->resolved,
                [this](const auto& entry) { return !index_.contains(entry.first); });
  snapshot_ = std::move(snapshot);
}

std::shared_ptr<const ReviewStore::Snapshot> ReviewStore::Current() const {
  return std::atomic_load(&snapshot_);
}

std::optional<ReviewTask> ReviewStore::NextTask(const std::string& annotator) {
  if (annotator.empty()) throw PreconditionError("annotator name is required");
  std::lock_guard<std::mutex> lock(write_mutex_);
  const auto snapshot = Current();
  const TimePoint now = options_.clock();
  std::erase_if(leases_, [&](const auto& entry) {
    return entry.second.expires_at <= now || snapshot->resolved.contains(entry.first);
  });

  auto make_task = [&](size_t i) {
    return ReviewTask{candidates_[i], MediaUrl(candidates_[i].image_ref),
                      leases_.at(candidates_[i].pair_id)};
  };
  for (size_t i = 0; i < candidates_.size(); ++i) {
    auto it = leases_.find(candidates_[i].pair_id);
    if (it != leases_.end() && it->second.annotator == annotator) return make_task(i);
  }
  for (size_t i = 0; i < candidates_.size(); ++i) {
    const std::string& id = candidates_[i].pair_id;
    if (snapshot->resolved.contains(id) || leases_.contains(id)) continue;
    leases_[id] = Lease{annotator, now + options_.lease_timeout};
    return make_task(i);
  }
  return std::nullopt;
}

ReviewVerdict ReviewStore::SubmitVerdict(const std::string& pair_id,
                                         const std::string& annotator,
                                         const ReviewCriteria& criteria) {
  if (annotator.empty()) throw PreconditionError("annotator name is required");
  if (!index_.contains(pair_id)) {
    throw NotFoundError("pair '" + pair_id + "' is not a review candidate");
  }
  std::lock_guard<std::mutex> lock(write_mutex_);
  const auto current = Current();
  ReviewVerdict verdict;
  verdict.seq = current->log.size() + 1;
  verdict.pair_id = pair_id;
  verdict.annotator = annotator;
  verdict.criteria = criteria;
  verdict.accept = criteria.AllPass();
  verdict.timestamp = FormatTimestamp(options_.clock());

  if (log_path_.has_parent_path()) std::filesystem::create_directories(log_path_.parent_path());
  {
    std::ofstream out(log_path_, std::ios::app | std::ios::binary);
    out << CanonicalDump(ToJson(verdict)) << '\n';
    out.flush();
    if (!out) throw IoError("cannot append to verdict log " + log_path_.string());
  }

  auto next = std::make_shared<Snapshot>(*current);
  next->log.push_back(verdict);
  next->resolved = ResolveVerdicts(next->log);
  std::erase_if(next->resolved,
                [this](const auto& entry) { return !index_.contains(entry.first); });
  std::atomic_store(&snapshot_, std::shared_ptr<const Snapshot>(std::move(next)));
  leases_.erase(pair_id);
  return verdict;
}

Progress ReviewStore::GetProgress() const {
  const auto snapshot = Current();
  Progress progress;
  progress.total = candidates_.size();
  progress.resolved = snapshot->resolved.size();
  for (const auto& [id, resolved] : snapshot->resolved) {
    if (resolved.accept) ++progress.accepted;
  }
  if (progress.resolved > 0) {
    progress.retention_rate =
        static_cast<double>(progress.accepted) / static_cast<double>(progress.resolved);
  }
  return progress;
}

std::vector<answerability::LabeledPair> ReviewStore::ExportLabels() const {
  const auto snapshot = Current();
  std::vector<answerability::LabeledPair> labels;
  for (const auto& candidate : candidates_) {
    auto it = snapshot->resolved.find(candidate.pair_id);
    if (it != snapshot->resolved.end()) {
      labels.push_back({candidate.pair_id, it->second.answerable_label});
    }
  }
  return labels;
}

std::vector<ReviewVerdict> ReviewStore::Log() const { return Current()->log; }

std::map<std::string, ResolvedVerdict> ReviewStore::Resolved() const {
  return Current()->resolved;
}

}  // namespace vqacurate::review

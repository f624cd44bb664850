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

#include "vqacurate/corpus/corpus.h"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"
#include "vqacurate/common/text.h"
#include "vqacurate/corpus/csv.h"

namespace vqacurate::corpus {

namespace {

constexpr std::array<const char*, 5> kFields = {
    "record_id", "source_id", "image_ref", "caption", "license_tag"};

bool HasControlChar(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u < 0x20 || u == 0x7F;
  });
}

// Relative paths may not climb out of the media root.
bool HasParentSegment(std::string_view ref) {
  if (ref.find("://") != std::string_view::npos) return false;
  size_t pos = 0;
  while (pos <= ref.size()) {
    size_t end = ref.find_first_of("/\\", pos);
    if (end == std::string_view::npos) end = ref.size();
    if (ref.substr(pos, end - pos) == "..") return true;
    pos = end + 1;
  }
  return false;
}

// Accepts records until a duplicate id appears; later duplicates are issues.
class RecordCollector {
 public:
  void Add(ImageCaptionRecord record, size_t row,
           std::vector<IngestIssue>& issues) {
    const std::string problem = ValidateRecord(record);
    if (!problem.empty()) {
      issues.push_back({row, record.record_id, problem, problem});
      return;
    }
    if (!seen_.insert(record.record_id).second) {
      issues.push_back({row, record.record_id, "duplicate id",
                        "record_id '" + record.record_id +
                            "' already seen; later row dropped"});
      return;
    }
    records_.push_back(std::move(record));
  }

  std::vector<ImageCaptionRecord> Take() { return std::move(records_); }

 private:
  std::unordered_set<std::string> seen_;
  std::vector<ImageCaptionRecord> records_;
};

void IngestJsonl(std::string_view stream, RecordCollector& collector,
                 std::vector<IngestIssue>& issues) {
  size_t row = 0;
  size_t pos = 0;
  while (pos < stream.size()) {
    size_t end = stream.find('\n', pos);
    if (end == std::string_view::npos) end = stream.size();
    const std::string_view line = stream.substr(pos, end - pos);
    pos = end + 1;
    ++row;
    if (text::Trim(line).empty()) continue;

    Json object;
    try {
      object = Json::parse(line);
    } catch (const Json::parse_error& e) {
      issues.push_back({row, "", "malformed row", e.what()});
      continue;
    }
    if (!object.is_object()) {
      issues.push_back({row, "", "malformed row", "row is not a JSON object"});
      continue;
    }
    ImageCaptionRecord record;
    std::array<std::string*, 5> slots = {&record.record_id, &record.source_id,
                                         &record.image_ref, &record.caption,
                                         &record.license_tag};
    std::string missing;
    for (size_t i = 0; i < kFields.size(); ++i) {
      auto it = object.find(kFields[i]);
      if (it == object.end() || !it->is_string()) {
        missing = kFields[i];
        break;
      }
      *slots[i] = it->get<std::string>();
    }
    if (!missing.empty()) {
      issues.push_back({row, record.record_id, "missing field",
                        "field '" + missing + "' missing or not a string"});
      continue;
    }
    collector.Add(std::move(record), row, issues);
  }
}

void IngestCsv(std::string_view stream, RecordCollector& collector,
               std::vector<IngestIssue>& issues) {
  std::vector<CsvRow> rows = ParseCsv(stream);
  if (rows.empty()) throw DataError("csv input lacks the mandatory header row");
  const CsvRow& header = rows.front();
  if (!header.error.empty()) throw DataError("csv header: " + header.error);
  std::array<size_t, 5> column{};
  for (size_t i = 0; i < kFields.size(); ++i) {
    auto it = std::find(header.fields.begin(), header.fields.end(), kFields[i]);
    if (it == header.fields.end()) {
      throw DataError(std::string("csv header lacks column '") + kFields[i] +
                      "'");
    }
    column[i] = static_cast<size_t>(it - header.fields.begin());
  }
  for (size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.error.empty() && row.fields.size() == 1 && row.fields[0].empty()) {
      continue;  // blank line
    }
    if (!row.error.empty()) {
      issues.push_back({row.line, "", "malformed row", row.error});
      continue;
    }
    if (row.fields.size() != header.fields.size()) {
      issues.push_back({row.line, "", "malformed row",
                        "expected " + std::to_string(header.fields.size()) +
                            " fields, got " + std::to_string(row.fields.size())});
      continue;
    }
    ImageCaptionRecord record{row.fields[column[0]], row.fields[column[1]],
                              row.fields[column[2]], row.fields[column[3]],
                              row.fields[column[4]]};
    collector.Add(std::move(record), row.line, issues);
  }
}

}  // namespace

Json ToJson(const ImageCaptionRecord& record) {
  return Json{{"record_id", record.record_id},
              {"source_id", record.source_id},
              {"image_ref", record.image_ref},
              {"caption", record.caption},
              {"license_tag", record.license_tag}};
}

Json ToJson(const IngestIssue& issue) {
  return Json{{"row", issue.row},
              {"record_id", issue.record_id},
              {"kind", issue.kind},
              {"message", issue.message}};
}

std::string ValidateRecord(const ImageCaptionRecord& record) {
  if (text::Trim(record.record_id).empty()) return "empty record_id";
  if (text::Trim(record.caption).empty()) return "empty caption";
  if (text::Trim(record.image_ref).empty()) return "empty image_ref";
  if (HasControlChar(record.image_ref) || HasParentSegment(record.image_ref)) {
    return "invalid image_ref";
  }
  return "";
}

Corpus::Corpus(std::vector<ImageCaptionRecord> records)
    : records_(std::move(records)) {
  manifest_hash_ = Sha256Hex(Serialize());
}

Corpus Corpus::FromRecords(std::vector<ImageCaptionRecord> records) {
  for (const auto& record : records) {
    const std::string problem = ValidateRecord(record);
    if (!problem.empty()) {
      throw DataError("record '" + record.record_id + "': " + problem);
    }
  }
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.record_id < b.record_id; });
  auto dup = std::adjacent_find(
      records.begin(), records.end(),
      [](const auto& a, const auto& b) { return a.record_id == b.record_id; });
  if (dup != records.end()) {
    throw DataError("duplicate record_id '" + dup->record_id + "'");
  }
  return Corpus(std::move(records));
}

std::string Corpus::Serialize() const {
  std::string out;
  for (const auto& record : records_) {
    out += CanonicalDump(ToJson(record));
    out += '\n';
  }
  return out;
}

SourceFormat ParseSourceFormat(std::string_view name) {
  if (name == "jsonl") return SourceFormat::kJsonl;
  if (name == "csv") return SourceFormat::kCsv;
  throw UsageError("unknown source format '" + std::string(name) +
                   "' (expected jsonl or csv)");
}

IngestResult Ingest(std::string_view stream, SourceFormat format) {
  size_t bad_offset = 0;
  if (!text::IsValidUtf8(stream, &bad_offset)) {
    throw DataError("input is not valid UTF-8 (byte offset " +
                    std::to_string(bad_offset) + ")");
  }
  if (stream.starts_with("\xEF\xBB\xBF")) stream.remove_prefix(3);

  IngestResult result;
  RecordCollector collector;
  if (format == SourceFormat::kJsonl) {
    IngestJsonl(stream, collector, result.issues);
  } else {
    IngestCsv(stream, collector, result.issues);
  }
  result.corpus = Corpus::FromRecords(collector.Take());
  return result;
}

CorpusStats ComputeCorpusStats(const Corpus& corpus) {
  CorpusStats stats;
  stats.record_count = corpus.size();
  for (const auto& record : corpus.records()) {
    ++stats.caption_length_histogram[text::WhitespaceSplit(record.caption).size()];
  }
  return stats;
}

Json ManifestJson(const Corpus& corpus, size_t issue_count) {
  const CorpusStats stats = ComputeCorpusStats(corpus);
  Json histogram = Json::object();
  for (const auto& [length, count] : stats.caption_length_histogram) {
    histogram[std::to_string(length)] = count;
  }
  return Json{{"manifest_hash", corpus.manifest_hash()},
              {"hash_algorithm", "sha256"},
              {"record_count", stats.record_count},
              {"issue_count", issue_count},
              {"caption_length_histogram", histogram}};
}

}  // namespace vqacurate::corpus

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

#ifndef VQACURATE_CORPUS_CORPUS_H_
#define VQACURATE_CORPUS_CORPUS_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vqacurate/common/jsonl.h"

namespace vqacurate::corpus {

// One source figure with its caption. Media bytes are never loaded; the
// image_ref is only checked syntactically.
struct ImageCaptionRecord {
  std::string record_id;
  std::string source_id;
  std::string image_ref;
  std::string caption;
  std::string license_tag;

  bool operator==(const ImageCaptionRecord&) const = default;
};

Json ToJson(const ImageCaptionRecord& record);

struct IngestIssue {
  size_t row = 0;  // 1-based line (JSONL) or record (CSV, header = 1).
  std::string record_id;
  std::string kind;  // e.g. "empty caption", "duplicate id".
  std::string message;
};

Json ToJson(const IngestIssue& issue);

// Immutable, canonically ordered set of records.
class Corpus {
 public:
  Corpus() = default;

  // Sorts by record_id. Throws DataError if a record violates the record
  // invariants or an id repeats.
  static Corpus FromRecords(std::vector<ImageCaptionRecord> records);

  const std::vector<ImageCaptionRecord>& records() const { return records_; }
  size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // Canonical JSON Lines (sorted keys, one record per line).
  std::string Serialize() const;
  // SHA-256 hex over Serialize().
  const std::string& manifest_hash() const { return manifest_hash_; }

  bool operator==(const Corpus& other) const {
    return records_ == other.records_;
  }

 private:
  explicit Corpus(std::vector<ImageCaptionRecord> records);

  std::vector<ImageCaptionRecord> records_;
  std::string manifest_hash_;
};

enum class SourceFormat { kJsonl, kCsv };

// Accepts "jsonl" or "csv". Throws UsageError otherwise.
SourceFormat ParseSourceFormat(std::string_view name);

struct IngestResult {
  Corpus corpus;
  std::vector<IngestIssue> issues;
};

// Reads records from a UTF-8 byte stream. Row-level problems become issues
// and the row is dropped; a later duplicate of a record_id is dropped. A
// stream that is not valid UTF-8, or a CSV without the mandatory header,
// throws DataError.
IngestResult Ingest(std::string_view stream, SourceFormat format);

// Returns an empty string when the record satisfies the invariants, else the
// issue kind.
std::string ValidateRecord(const ImageCaptionRecord& record);

struct CorpusStats {
  size_t record_count = 0;
  // Whitespace-token count -> number of captions.
  std::map<size_t, size_t> caption_length_histogram;
};

CorpusStats ComputeCorpusStats(const Corpus& corpus);

// Contents of corpus.manifest.json.
Json ManifestJson(const Corpus& corpus, size_t issue_count);

}  // namespace vqacurate::corpus

#endif  // VQACURATE_CORPUS_CORPUS_H_

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

#include <cstdio>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"
#include "vqacurate/common/error.h"
#include "vqacurate/corpus/corpus.h"
#include "vqacurate/corpus/csv.h"

namespace vqacurate::corpus {
namespace {

std::string Row(const std::string& id, const std::string& caption,
                const std::string& image = "figs/a.jpg") {
  return CanonicalDump(Json{{"record_id", id},
                            {"source_id", "PMC1"},
                            {"image_ref", image},
                            {"caption", caption},
                            {"license_tag", "CC BY"}}) +
         "\n";
}

TEST(Ingest, WellFormedRows) {
  const auto result =
      Ingest(Row("r3", "three") + Row("r1", "one") + Row("r2", "two"), SourceFormat::kJsonl);
  ASSERT_EQ(result.corpus.size(), 3u);
  EXPECT_TRUE(result.issues.empty());
  EXPECT_EQ(result.corpus.records()[0].record_id, "r1");
  EXPECT_EQ(result.corpus.records()[2].record_id, "r3");
}

TEST(Ingest, EmptyCaptionDropped) {
  const auto result = Ingest(Row("r1", "  ") + Row("r2", "ok"), SourceFormat::kJsonl);
  EXPECT_EQ(result.corpus.size(), 1u);
  ASSERT_EQ(result.issues.size(), 1u);
  EXPECT_EQ(result.issues[0].kind, "empty caption");
  EXPECT_EQ(result.issues[0].row, 1u);
}

TEST(Ingest, DuplicateIdKeepsFirst) {
  const auto result = Ingest(Row("r1", "first") + Row("r1", "second"), SourceFormat::kJsonl);
  ASSERT_EQ(result.corpus.size(), 1u);
  EXPECT_EQ(result.corpus.records()[0].caption, "first");
  ASSERT_EQ(result.issues.size(), 1u);
  EXPECT_EQ(result.issues[0].kind, "duplicate id");
}

TEST(Ingest, MalformedRowsBecomeIssues) {
  const auto result = Ingest("not json\n{\"record_id\":\"x\"}\n" + Row("r1", "fine") +
                                 Row("r2", "bad ref", "../escape.jpg"),
                             SourceFormat::kJsonl);
  EXPECT_EQ(result.corpus.size(), 1u);
  ASSERT_EQ(result.issues.size(), 3u);
  EXPECT_EQ(result.issues[0].kind, "malformed row");
  EXPECT_EQ(result.issues[1].kind, "missing field");
  EXPECT_EQ(result.issues[2].kind, "invalid image_ref");
}

TEST(Ingest, InvalidUtf8IsFatal) {
  EXPECT_THROW(Ingest(Row("r1", "ok") + "\xff\xfe\n", SourceFormat::kJsonl), DataError);
  EXPECT_THROW(ParseSourceFormat("parquet"), UsageError);
}

TEST(Ingest, CsvWithQuotedFields) {
  const std::string csv =
      "record_id,source_id,image_ref,caption,license_tag\r\n"
      "r1,PMC1,a.jpg,\"CT, axial \"\"view\"\"\nsecond line\",CC BY\r\n"
      "r2,PMC2,b.jpg,plain,CC0\n"
      "r3,PMC3,c.jpg,too,many,fields\n";
  const auto result = Ingest(csv, SourceFormat::kCsv);
  ASSERT_EQ(result.corpus.size(), 2u);
  EXPECT_EQ(result.corpus.records()[0].caption, "CT, axial \"view\"\nsecond line");
  ASSERT_EQ(result.issues.size(), 1u);
  EXPECT_EQ(result.issues[0].row, 5u);
  EXPECT_THROW(Ingest("", SourceFormat::kCsv), DataError);
  EXPECT_THROW(Ingest("record_id,caption\nr1,x\n", SourceFormat::kCsv), DataError);
}

TEST(Csv, EscapeRoundTrip) {
  const std::vector<std::string> fields = {"a", "b,c", "d\"e", "f\ng", ""};
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + CsvEscape(fields[i]);
  const auto rows = ParseCsv(line + "\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].fields, fields);
  EXPECT_FALSE(ParseCsv("a,b\"c\n")[0].error.empty());
  EXPECT_FALSE(ParseCsv("\"open\n")[0].error.empty());
}

TEST(Corpus, DeterministicHashAndRoundTrip) {
  const std::string stream = Row("r2", "b c") + Row("r1", "a");
  const auto first = Ingest(stream, SourceFormat::kJsonl);
  const auto second = Ingest(Row("r1", "a") + Row("r2", "b c"), SourceFormat::kJsonl);
  EXPECT_EQ(first.corpus.manifest_hash(), second.corpus.manifest_hash());
  EXPECT_EQ(first.corpus.manifest_hash().size(), 64u);
  const auto again = Ingest(first.corpus.Serialize(), SourceFormat::kJsonl);
  EXPECT_EQ(again.corpus, first.corpus);
  EXPECT_EQ(again.corpus.Serialize(), first.corpus.Serialize());
}

TEST(Corpus, FromRecordsRejectsInvalid) {
  EXPECT_THROW(Corpus::FromRecords({{"r1", "s", "a.jpg", "", "CC0"}}), DataError);
  EXPECT_THROW(Corpus::FromRecords({{"r1", "s", "a.jpg", "x", "CC0"},
                                    {"r1", "s", "b.jpg", "y", "CC0"}}),
               DataError);
}

TEST(CorpusStats, Histogram) {
  EXPECT_EQ(ComputeCorpusStats(Corpus()).record_count, 0u);
  EXPECT_TRUE(ComputeCorpusStats(Corpus()).caption_length_histogram.empty());
  const auto corpus =
      Ingest(Row("r1", "one two three") + Row("r2", "a b c d e"), SourceFormat::kJsonl).corpus;
  const auto stats = ComputeCorpusStats(corpus);
  EXPECT_EQ(stats.record_count, 2u);
  EXPECT_EQ(stats.caption_length_histogram, (std::map<size_t, size_t>{{3, 1}, {5, 1}}));
}

TEST(CorpusStats, LargeSyntheticCorpusCount) {
  // Same record layout as tests/fixtures/make_corpus.py --count.
  constexpr size_t kRecords = 381000;
  std::string stream;
  stream.reserve(kRecords * 150);
  char id[32];
  for (size_t i = 0; i < kRecords; ++i) {
    std::snprintf(id, sizeof(id), "rec%06zu", i);
    const size_t image = i * 100 / 118;
    stream += Row(id, "Axial CT of the liver showing lesion " + std::to_string(i % 97),
                  "figures/PMC" + std::to_string(7000000 + image) + "_fig1.jpg");
  }
  const auto result = Ingest(stream, SourceFormat::kJsonl);
  EXPECT_TRUE(result.issues.empty());
  EXPECT_EQ(ComputeCorpusStats(result.corpus).record_count, kRecords);
  EXPECT_EQ(ManifestJson(result.corpus, 0).value("record_count", size_t{0}), kRecords);
}

}  // namespace
}  // namespace vqacurate::corpus

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

#include "gtest/gtest.h"
#include "test_util.h"
#include "vqacurate/common/error.h"
#include "vqacurate/review/verdict.h"
#include "vqacurate/splitter/splitter.h"

namespace vqacurate::splitter {
namespace {

using testing::FixturePath;
using testing::LoadFixtureJson;
using testing::MakePair;

review::ReviewVerdict Verdict(const std::string& pair, const std::string& who, bool q, bool d,
                              bool i) {
  review::ReviewVerdict v;
  v.pair_id = pair;
  v.annotator = who;
  v.criteria = {q, d, i};
  v.accept = v.criteria.AllPass();
  return v;
}

SplitAssignment WithCandidates(std::vector<std::string> ids) {
  SplitAssignment a;
  a.test_initial = ids;
  a.review_candidates = std::move(ids);
  return a;
}

TEST(Split, ReferenceAssignment) {
  const Json ref = LoadFixtureJson("expected_rng.json").at("split");
  std::vector<qagen::QAPair> pairs;
  for (const auto& row : ref.at("pairs")) {
    auto pair = MakePair("rec", row.at(0).get<std::string>(), {"a", "b", "c", "d"}, 'A',
                         row.at(1).get<std::string>());
    pair.pair_id = row.at(0).get<std::string>();
    pairs.push_back(pair);
  }
  Budgets budgets;
  budgets.test_pairs = ref.at("test_pairs").get<size_t>();
  const auto split = SplitTrainTest(pairs, budgets, ref.at("seed").get<std::uint64_t>());
  EXPECT_EQ(split.test_initial, ref.at("test_initial").get<std::vector<std::string>>());
  EXPECT_EQ(split.train, ref.at("train").get<std::vector<std::string>>());
  EXPECT_EQ(AssignmentFromJson(ToJson(split)), split);
}

TEST(Split, Preconditions) {
  std::vector<qagen::QAPair> pairs = {MakePair("r1", "a?"), MakePair("r2", "b?")};
  Budgets budgets;
  budgets.test_pairs = 2;
  EXPECT_THROW(SplitTrainTest(pairs, budgets, 1), PreconditionError);
  budgets.test_pairs = 1;
  pairs.push_back(pairs[0]);
  EXPECT_THROW(SplitTrainTest(pairs, budgets, 1), DataError);
  EXPECT_THROW(SampleForReview(SplitAssignment(), 1), PreconditionError);
}

TEST(Split, ImageKeyFallsBackToRecord) {
  EXPECT_EQ(ImageKey(MakePair("r1", "q", {"a", "b", "c", "d"}, 'A', "img.png")), "image:img.png");
  EXPECT_EQ(ImageKey(MakePair("r1", "q")), "record:r1");
}

TEST(ReviewSample, ReferenceDraw) {
  const Json ref = LoadFixtureJson("expected_rng.json").at("review_sample");
  SplitAssignment a;
  a.test_initial = ref.at("test_ids").get<std::vector<std::string>>();
  a.budgets.review_n = ref.at("review_n").get<size_t>();
  const auto sampled = SampleForReview(a, ref.at("seed").get<std::uint64_t>());
  EXPECT_EQ(sampled.review_candidates, ref.at("candidates").get<std::vector<std::string>>());
  a.budgets.review_n = 500;
  EXPECT_EQ(SampleForReview(a, 1).review_candidates.size(), a.test_initial.size());
}

TEST(Finalize, AllAcceptAndAllReject) {
  const auto a = WithCandidates({"p2", "p1", "p3"});
  std::vector<review::ReviewVerdict> accept, reject;
  for (const auto& id : a.review_candidates) {
    accept.push_back(Verdict(id, "ann", true, true, true));
    reject.push_back(Verdict(id, "ann", true, true, false));
  }
  FinalizeReport report;
  EXPECT_EQ(FinalizeCleanTest(a, accept, true, {}, &report).test_clean,
            (std::vector<std::string>{"p1", "p2", "p3"}));
  EXPECT_EQ(report.retention_rate, 1.0);
  EXPECT_TRUE(FinalizeCleanTest(a, reject, true, {}, &report).test_clean.empty());
  EXPECT_EQ(report.accepted, 0u);
  EXPECT_EQ(report.resolved, 3u);
}

TEST(Finalize, StrictModeListsUnresolved) {
  const auto a = WithCandidates({"p1", "p2", "p3"});
  const std::vector<review::ReviewVerdict> some = {Verdict("p2", "ann", true, true, true)};
  try {
    FinalizeCleanTest(a, some, true, {});
    FAIL() << "strict mode accepted unresolved candidates";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("p1, p3"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(FinalizeCleanTest(a, some, true, {"p1", "p3"}));
  FinalizeReport report;
  EXPECT_EQ(FinalizeCleanTest(a, some, false, {}, &report).test_clean,
            std::vector<std::string>{"p2"});
  EXPECT_EQ(report.unresolved, 2u);
}

TEST(Finalize, MixedLogMatchesOracle) {
  const Json ref = LoadFixtureJson("expected_verdicts.json");
  const auto log = review::ReadVerdictLog(FixturePath("verdict_log.jsonl").string());
  const auto a = WithCandidates(ref.at("candidates").get<std::vector<std::string>>());
  FinalizeReport report;
  const auto clean = FinalizeCleanTest(a, log, false, {}, &report);
  EXPECT_EQ(clean.test_clean, ref.at("test_clean").get<std::vector<std::string>>());
  EXPECT_EQ(report.resolved, ref.at("progress").at("resolved").get<size_t>());
  EXPECT_EQ(report.accepted, ref.at("progress").at("accepted").get<size_t>());
  EXPECT_DOUBLE_EQ(report.retention_rate, ref.at("progress").at("retention_rate").get<double>());
}

TEST(Resolve, LatestPerAnnotatorThenMajorityTieRejects) {
  const std::vector<review::ReviewVerdict> log = {
      Verdict("p", "a", true, true, true),   Verdict("p", "b", true, true, false),
      Verdict("p", "a", true, false, true),  // a revises to reject
      Verdict("q", "a", true, true, true),   Verdict("q", "b", false, true, false),
      Verdict("r", "a", true, true, true),   Verdict("r", "b", true, true, true),
      Verdict("r", "c", false, false, false)};
  const auto resolved = review::ResolveVerdicts(log);
  EXPECT_EQ(resolved.at("p"), (review::ResolvedVerdict{false, 1, 2}));
  EXPECT_EQ(resolved.at("q"), (review::ResolvedVerdict{false, 0, 2}));
  EXPECT_EQ(resolved.at("r"), (review::ResolvedVerdict{true, 1, 3}));
}

TEST(Resolve, FixtureLogMatchesOracle) {
  const Json ref = LoadFixtureJson("expected_verdicts.json");
  const auto log = review::ReadVerdictLog(FixturePath("verdict_log.jsonl").string());
  for (const auto& v : log) EXPECT_EQ(v.accept, v.criteria.AllPass());
  const auto resolved = review::ResolveVerdicts(log);
  ASSERT_EQ(resolved.size(), ref.at("resolved").size());
  for (const auto& [pid, want] : ref.at("resolved").items()) {
    const auto& got = resolved.at(pid);
    EXPECT_EQ(got.accept, want.at("accept").get<bool>()) << pid;
    EXPECT_EQ(got.answerable_label, want.at("answerable_label").get<int>()) << pid;
    EXPECT_EQ(got.annotators, want.at("annotators").get<int>()) << pid;
  }
  EXPECT_THROW(review::VerdictFromJson(Json{{"pair_id", "x"}}), DataError);
}

}  // namespace
}  // namespace vqacurate::splitter

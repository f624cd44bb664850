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

#include <atomic>
#include <thread>

#include "gtest/gtest.h"
#include "httplib.h"
#include "test_util.h"
#include "vqacurate/common/error.h"
#include "vqacurate/textfilter/answerer.h"
#include "vqacurate/textfilter/textfilter.h"

namespace vqacurate::textfilter {
namespace {

using testing::LoadFixtureJson;
using testing::MakePair;

qagen::QAPair FixturePair(const Json& fixture) {
  const Json& p = fixture.at("pair");
  const auto options = p.at("options").get<std::vector<std::string>>();
  return MakePair(p.at("record_id"), p.at("question"),
                  {options[0], options[1], options[2], options[3]},
                  p.at("answer_letter").get<std::string>()[0]);
}

std::vector<qagen::QAPair> PairsWithIds(const std::vector<std::string>& ids) {
  std::vector<qagen::QAPair> pairs;
  for (const auto& id : ids) {
    auto pair = MakePair("r-" + id, "Question " + id + "?");
    pair.pair_id = id;
    pairs.push_back(pair);
  }
  return pairs;
}

TEST(Partition, SizesAndReference) {
  std::vector<std::string> ten;
  for (int i = 0; i < 10; ++i) ten.push_back("x" + std::to_string(i));
  auto part = PartitionForFilter(PairsWithIds(ten), 3);
  EXPECT_EQ(part.part_a.size(), 5u);
  EXPECT_EQ(part.part_b.size(), 5u);

  const Json ref = LoadFixtureJson("expected_rng.json").at("partition");
  const auto pairs = PairsWithIds(ref.at("ids").get<std::vector<std::string>>());
  part = PartitionForFilter(pairs, ref.at("seed").get<std::uint64_t>());
  EXPECT_EQ(part.part_a, ref.at("part_a").get<std::vector<std::string>>());
  EXPECT_EQ(part.part_b, ref.at("part_b").get<std::vector<std::string>>());
  auto reversed = pairs;
  std::reverse(reversed.begin(), reversed.end());
  EXPECT_EQ(PartitionForFilter(reversed, 7).part_a, part.part_a);
  EXPECT_THROW(PartitionForFilter({}, 1), PreconditionError);
}

TEST(Shuffle, ReferencePermutations) {
  const Json fixture = LoadFixtureJson("expected_rng.json").at("text_filter_fixture");
  const auto pair = FixturePair(fixture);
  ASSERT_EQ(pair.pair_id, fixture.at("pair_id").get<std::string>());
  const auto run_seed = fixture.at("run_seed").get<std::uint64_t>();
  for (int t = 0; t < kTrials; ++t) {
    const Json& trial = fixture.at("trials").at(t);
    const auto seed = TrialSeed(run_seed, pair.pair_id, t);
    EXPECT_EQ(std::to_string(seed), trial.at("trial_seed").get<std::string>());
    const auto shuffled = ShuffleOptions(pair, seed);
    EXPECT_EQ(shuffled.permutation, (trial.at("permutation").get<Permutation>()));
    for (int i = 0; i < 4; ++i) {
      EXPECT_EQ(shuffled.options[shuffled.permutation[i]], pair.options[i]);
    }
  }
}

TEST(Shuffle, GoldFollowsPermutation) {
  const auto pair = MakePair("r", "q", {"w", "x", "y", "z"}, 'B');
  const Permutation perm = {2, 0, 3, 1};
  // Gold B (original 1) is shown at position 0, letter A.
  const AnswerTrial right(0, perm, 'A', pair.answer_index());
  const AnswerTrial wrong(0, perm, 'B', pair.answer_index());
  EXPECT_TRUE(right.correct());
  EXPECT_FALSE(wrong.correct());
  EXPECT_THROW(AnswerTrial(0, Permutation{0, 0, 1, 2}, 'A', 0), PreconditionError);
  EXPECT_FALSE(IsBijection({0, 1, 2, 4}));
}

TEST(RunTrials, ConstantAnswererOnFixture) {
  const Json fixture = LoadFixtureJson("expected_rng.json").at("text_filter_fixture");
  const auto pair = FixturePair(fixture);
  ConstantAnswerer always_a('A');
  const auto verdict = RunTrials(always_a, pair, fixture.at("run_seed").get<std::uint64_t>());
  EXPECT_EQ(verdict.n_correct(), fixture.at("constant_a_n_correct").get<int>());
  EXPECT_EQ(verdict.dismissed(), fixture.at("constant_a_dismissed").get<bool>());
  ASSERT_EQ(verdict.trials().size(), 5u);
}

TEST(RunTrials, UniformAnswererLetters) {
  const Json fixture = LoadFixtureJson("expected_rng.json").at("text_filter_fixture");
  const auto pair = FixturePair(fixture);
  UniformRandomAnswerer answerer(fixture.at("uniform_answerer_seed").get<std::uint64_t>());
  const auto verdict = RunTrials(answerer, pair, 7);
  const auto letters = fixture.at("uniform_answerer_letters").get<std::vector<std::string>>();
  for (int t = 0; t < kTrials; ++t) {
    EXPECT_EQ(std::string(1, *verdict.trials()[t].predicted_letter()), letters[t]);
  }
}

TEST(RunTrials, OracleAndAbstain) {
  const auto pair = MakePair("r", "What?", {"w", "x", "y", "z"}, 'C');
  OracleAnswerer oracle({pair});
  AbstainAnswerer abstain;
  EXPECT_EQ(RunTrials(oracle, pair, 1).n_correct(), 5);
  EXPECT_TRUE(RunTrials(oracle, pair, 1).dismissed());
  EXPECT_EQ(RunTrials(abstain, pair, 1).n_correct(), 0);
  EXPECT_FALSE(RunTrials(abstain, pair, 1).dismissed());
}

class ThrowingAnswerer : public Answerer {
 public:
  std::string id() const override { return "throwing"; }
  AnswerResult Answer(const AnswerRequest& request) override {
    if (request.trial_index % 2 == 0) throw std::runtime_error("connection reset");
    return {std::nullopt, true, "timeout"};
  }
};

TEST(RunTrials, TransportFailuresAreFlaggedAbstentions) {
  const auto pair = MakePair("r", "What?", {"w", "x", "y", "z"}, 'C');
  ThrowingAnswerer answerer;
  const auto verdict = RunTrials(answerer, pair, 1);
  EXPECT_EQ(verdict.n_correct(), 0);
  for (const auto& trial : verdict.trials()) {
    EXPECT_TRUE(trial.transport_failure());
    EXPECT_FALSE(trial.predicted_letter().has_value());
  }
}

TEST(ApplyFilter, ThresholdExamples) {
  std::vector<qagen::QAPair> pairs;
  std::vector<TextOnlyVerdict> verdicts;
  const Permutation identity = {0, 1, 2, 3};
  for (int n : {5, 3, 2, 0}) {
    pairs.push_back(MakePair("r", "Question " + std::to_string(n)));
    std::vector<AnswerTrial> trials;
    for (int t = 0; t < kTrials; ++t) trials.emplace_back(t, identity, t < n ? 'A' : 'B', 0);
    verdicts.emplace_back(pairs.back().pair_id, trials);
  }
  const auto kept = ApplyFilter(pairs, verdicts);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].pair_id, pairs[2].pair_id);
  EXPECT_EQ(kept[0].stage, qagen::Stage::kKeptByTextFilter);

  std::vector<TextOnlyVerdict> missing(verdicts.begin(), verdicts.begin() + 3);
  try {
    ApplyFilter(pairs, missing);
    FAIL() << "missing verdict accepted";
  } catch (const NotFoundError& e) {
    EXPECT_NE(std::string(e.what()).find(pairs[3].pair_id), std::string::npos);
  }
  EXPECT_TRUE(ApplyFilter({pairs[0], pairs[1]}, verdicts).empty());
}

TEST(VerdictJson, RoundTripAndTamperDetection) {
  const auto pair = MakePair("r", "What?", {"w", "x", "y", "z"}, 'D');
  UniformRandomAnswerer answerer(4);
  const auto verdict = RunTrials(answerer, pair, 9, 'b');
  const Json json = ToJson(verdict);
  const auto back = VerdictFromJson(json, pair.answer_index());
  EXPECT_EQ(back.n_correct(), verdict.n_correct());
  EXPECT_EQ(back.part(), 'b');
  Json tampered = json;
  tampered["dismissed"] = !verdict.dismissed();
  EXPECT_THROW(VerdictFromJson(tampered, pair.answer_index()), DataError);
}

TEST(RunFilter, DeterministicAcrossConcurrency) {
  std::vector<qagen::QAPair> pairs;
  for (int i = 0; i < 200; ++i) pairs.push_back(MakePair("r" + std::to_string(i), "Q?"));
  const auto partition = PartitionForFilter(pairs, 2);
  UniformRandomAnswerer a(1), b(2);
  const auto serial = RunFilter(pairs, partition, a, b, 5, 1);
  const auto parallel = RunFilter(pairs, partition, a, b, 5, 8);
  ASSERT_EQ(serial.size(), parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(ToJson(serial[i]), ToJson(parallel[i]));
    EXPECT_EQ(serial[i].pair_id(), pairs[i].pair_id);
    const bool in_a = std::binary_search(partition.part_a.begin(), partition.part_a.end(),
                                         pairs[i].pair_id);
    EXPECT_EQ(serial[i].part(), in_a ? 'a' : 'b');
  }
}

TEST(HttpAnswerer, WireContract) {
  httplib::Server server;
  std::atomic<int> calls{0};
  Json seen;
  server.Post("/answer", [&](const httplib::Request& req, httplib::Response& res) {
    seen = Json::parse(req.body);
    if (calls++ == 0) {
      res.status = 500;
      return;
    }
    res.set_content("{\"letter\":\"c\"}", "application/json");
  });
  server.Post("/abstain", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"letter\":null}", "application/json");
  });
  server.Post("/down", [](const httplib::Request&, httplib::Response& res) { res.status = 502; });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  const std::string base = "http://127.0.0.1:" + std::to_string(port);

  const std::array<std::string, 4> options = {"w", "x", "y", "z"};
  const AnswerRequest request{"pid", 0, "What?", &options};
  HttpAnswerer answerer(base + "/answer", 5, 2);
  const auto result = answerer.Answer(request);
  EXPECT_EQ(result.letter, 'C');
  EXPECT_FALSE(result.transport_failure);
  EXPECT_EQ(seen.at("question"), "What?");
  EXPECT_EQ(seen.at("options").at(2), (Json{{"letter", "C"}, {"text", "y"}}));
  EXPECT_FALSE(HttpAnswerer(base + "/abstain").Answer(request).letter.has_value());
  EXPECT_TRUE(HttpAnswerer(base + "/down", 5, 1).Answer(request).transport_failure);
  server.stop();
  thread.join();
}

}  // namespace
}  // namespace vqacurate::textfilter

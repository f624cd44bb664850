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

#include <fstream>
#include <map>

#include "gtest/gtest.h"
#include "test_util.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"
#include "vqacurate/pipeline/config.h"
#include "vqacurate/pipeline/manifest.h"
#include "vqacurate/pipeline/pipeline.h"
#include "vqacurate/pipeline/stages.h"
#include "vqacurate/qagen/qa_pair.h"

namespace vqacurate::pipeline {
namespace {

using testing::FixturePath;
using testing::TempDir;

PipelineConfig SmallConfig(const std::filesystem::path& workdir) {
  PipelineConfig config = LoadConfig(FixturePath("pipeline100.toml"));
  config.workdir = workdir;
  config.split.verdict_log = workdir / "verdicts.review.jsonl";
  config.eval.bootstrap.resamples = 200;
  config.classifier.hyper.epochs = 50;
  return config;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Config, ParsesAndRejects) {
  const auto config = LoadConfig(FixturePath("pipeline100.toml"));
  EXPECT_EQ(config.run_seed, 17u);
  EXPECT_EQ(config.source, FixturePath("corpus100.jsonl"));
  EXPECT_EQ(config.split.budgets.test_pairs, 60u);
  EXPECT_EQ(config.eval.bootstrap.resamples, 1000u);

  const std::string base = "run_seed = 1\n[paths]\nworkdir = \"w\"\nsource = \"s.jsonl\"\n";
  EXPECT_NO_THROW(ParseConfig(base, "/tmp"));
  EXPECT_THROW(ParseConfig(base + "bogus = 1\n", "/tmp"), UsageError);
  EXPECT_THROW(ParseConfig(base + "[split]\ntest_pair = 3\n", "/tmp"), UsageError);
  EXPECT_THROW(ParseConfig(base + "[generation]\nbackend = \"magic\"\n", "/tmp"), UsageError);
  EXPECT_THROW(ParseConfig("[paths]\nworkdir = \"w\"\nsource = \"s\"\n", "/tmp"), UsageError);
  EXPECT_THROW(ParseConfig("run_seed = 1\n", "/tmp"), UsageError);
  EXPECT_THROW(ParseConfig("run_seed = [", "/tmp"), UsageError);
  EXPECT_THROW(LoadConfig("/nonexistent/x.toml"), UsageError);
}

TEST(Manifest, JsonRoundTrip) {
  StageManifest m;
  m.stage = "parse";
  m.inputs = {{"generations.jsonl", std::string(64, 'a')}, {"params", std::string(64, 'b')}};
  m.outputs = {{"pairs.generated.jsonl", std::string(64, 'c')}};
  m.primary_output = "pairs.generated.jsonl";
  m.output_hash = std::string(64, 'c');
  m.counts_in = {{"generations", 3}};
  m.counts_out = {{"pairs", 14}};
  const Json json = ToJson(m);
  EXPECT_FALSE(json.contains("wall_time_seconds"));
  const auto back = ManifestFromJson(json);
  EXPECT_EQ(ToJson(back), json);
  EXPECT_TRUE(back.SameRun(m));
}

TEST(Pipeline, UnknownStage) {
  TempDir dir("pipe");
  Pipeline p(SmallConfig(dir / "run"));
  EXPECT_THROW(p.RunStage("train-model"), UsageError);
  EXPECT_THROW(p.RunStage("parse"), PreconditionError);
}

class PipelineRun : public ::testing::Test {
 protected:
  TempDir dir_{"pipe"};
};

TEST_F(PipelineRun, FreshRunThenRerunSkips) {
  Pipeline p(SmallConfig(dir_ / "run"));
  const auto first = p.RunAll();
  ASSERT_EQ(first.size(), StageNames().size());
  for (const auto& m : first) {
    EXPECT_FALSE(m.skipped) << m.stage;
    EXPECT_TRUE(std::filesystem::exists(ManifestPath(dir_ / "run", m.stage)));
    EXPECT_EQ(Sha256FileHex(dir_ / "run" / m.primary_output), m.output_hash) << m.stage;
  }
  std::vector<std::string> ran;
  Pipeline again(SmallConfig(dir_ / "run"), {[&](const std::string& s) { ran.push_back(s); }});
  for (const auto& m : again.RunAll()) EXPECT_TRUE(m.skipped) << m.stage;
  EXPECT_TRUE(ran.empty());

  // Pair stages only move forward along the file chain.
  std::map<std::string, qagen::Stage> prev;
  for (const char* file : {"pairs.generated.jsonl", "pairs.textfiltered.jsonl",
                           "pairs.classified.jsonl"}) {
    std::map<std::string, qagen::Stage> cur;
    for (const auto& pair : qagen::ReadPairsFile((dir_ / "run" / file).string())) {
      cur[pair.pair_id] = pair.stage;
      if (!prev.empty()) {
        ASSERT_TRUE(prev.count(pair.pair_id)) << file;
        EXPECT_GT(static_cast<int>(pair.stage), static_cast<int>(prev[pair.pair_id]));
      }
    }
    prev = cur;
  }
}

TEST_F(PipelineRun, FailureKeepsEarlierManifests) {
  Pipeline p(SmallConfig(dir_ / "run"), {[](const std::string& s) {
               if (s == "filter-text") throw IoError("injected");
             }});
  EXPECT_THROW(p.RunAll(), IoError);
  EXPECT_TRUE(ReadManifest(dir_ / "run", "parse").has_value());
  EXPECT_FALSE(ReadManifest(dir_ / "run", "filter-text").has_value());

  std::vector<std::string> ran;
  Pipeline resume(SmallConfig(dir_ / "run"), {[&](const std::string& s) { ran.push_back(s); }});
  resume.RunAll();
  ASSERT_FALSE(ran.empty());
  EXPECT_EQ(ran.front(), "filter-text");
}

TEST_F(PipelineRun, TamperedOutputs) {
  auto config = SmallConfig(dir_ / "run");
  Pipeline(config).RunAll();
  const auto pairs = dir_ / "run" / "pairs.generated.jsonl";
  const std::string original = Slurp(pairs);
  std::ofstream(pairs, std::ios::app) << "\n";

  config.strict = true;
  EXPECT_THROW(Pipeline(config).RunStage("parse"), DataError);
  EXPECT_THROW(Pipeline(config).RunStage("filter-text"), DataError);

  config.strict = false;
  std::vector<std::string> ran;
  Pipeline(config, {[&](const std::string& s) { ran.push_back(s); }}).RunAll();
  ASSERT_FALSE(ran.empty());
  EXPECT_EQ(ran.front(), "parse");
  EXPECT_EQ(Slurp(pairs), original);
}

TEST_F(PipelineRun, ParamsChangeRerunsDownstreamOnly) {
  auto config = SmallConfig(dir_ / "run");
  Pipeline(config).RunAll();
  config.eval.bootstrap.resamples = 300;
  std::vector<std::string> ran;
  Pipeline(config, {[&](const std::string& s) { ran.push_back(s); }}).RunAll();
  EXPECT_EQ(ran, std::vector<std::string>{"eval"});
}

}  // namespace
}  // namespace vqacurate::pipeline

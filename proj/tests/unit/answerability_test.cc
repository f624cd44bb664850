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

#include <bit>
#include <cmath>

#include "gtest/gtest.h"
#include "test_util.h"
#include "vqacurate/answerability/classifier.h"
#include "vqacurate/answerability/features.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/random.h"

namespace vqacurate::answerability {
namespace {

using testing::LoadFixtureJson;
using testing::MakePair;

std::array<std::string, 4> Options(const Json& json) {
  const auto v = json.get<std::vector<std::string>>();
  return {v[0], v[1], v[2], v[3]};
}

TEST(Features, MatchReferenceHashing) {
  const Json ref = LoadFixtureJson("expected_features.json");
  const std::string question = ref.at("question");
  const auto options = Options(ref.at("options"));
  const auto strings = FeatureStrings(question, options);
  ASSERT_EQ(strings.size(), ref.at("features").size());
  for (size_t i = 0; i < strings.size(); ++i) {
    const Json& f = ref.at("features").at(i);
    EXPECT_EQ(strings[i], f.at("feature").get<std::string>());
    EXPECT_EQ(BucketIndex(strings[i]), f.at("bucket").get<std::uint32_t>());
    EXPECT_EQ(BucketSign(strings[i]), f.at("sign").get<double>());
  }
  EXPECT_EQ(FeatureStrings(question, options, {.include_options = false}),
            ref.at("question_only_features").get<std::vector<std::string>>());
  const auto x = Featurize(question, options);
  ASSERT_EQ(x.entries.size(), ref.at("vector").size());
  for (size_t i = 0; i < x.entries.size(); ++i) {
    EXPECT_EQ(x.entries[i].first, ref.at("vector").at(i).at(0).get<std::uint32_t>());
    EXPECT_NEAR(x.entries[i].second, ref.at("vector").at(i).at(1).get<double>(), 1e-15);
  }
  EXPECT_NEAR(SquaredNorm(x), 1.0, 1e-12);
  EXPECT_THROW(Featurize("  ", options), PreconditionError);
}

TEST(Predict, ThresholdEdgesAndMonotonicity) {
  const auto pair = MakePair("r", "What lesion is shown?");
  ClassifierModel zero;
  EXPECT_EQ(PredictPair(zero, pair), 0.5);
  const auto kept = ApplyClassifier({pair, MakePair("r2", "Other?")}, zero);
  EXPECT_EQ(kept.kept.size(), 2u);
  EXPECT_EQ(kept.kept[0].stage, qagen::Stage::kKeptByClassifier);
  EXPECT_EQ(kept.pairs_per_image, 1.0);

  ClassifierModel negative;
  negative.bias = -10.0;
  EXPECT_TRUE(ApplyClassifier({pair}, negative).kept.empty());

  const auto x = Featurize(pair.question, pair.options);
  ClassifierModel model;
  double last = Predict(model, x);
  for (int step = 1; step <= 5; ++step) {
    for (const auto& [idx, v] : x.entries) model.weights[idx] += 0.1 * v;
    const double p = Predict(model, x);
    EXPECT_GT(p, last);
    last = p;
  }
  EXPECT_NEAR(Sigmoid(800.0), 1.0, 0.0);
  EXPECT_NEAR(Sigmoid(-800.0), 0.0, 1e-300);
}

TEST(ApplyClassifier, KeptSetMatchesScalarRecompute) {
  Rng rng(12);
  ClassifierModel model;
  for (auto& w : model.weights) w = rng.UniformDouble() * 2.0 - 1.0;
  model.bias = 0.05;
  std::vector<qagen::QAPair> pairs;
  for (int i = 0; i < 200; ++i) {
    pairs.push_back(MakePair("r" + std::to_string(i % 50),
                             "What finding number " + std::to_string(i) + " is visible?",
                             {"cyst " + std::to_string(i % 3), "mass", "node", "fluid"}));
  }
  const auto result = ApplyClassifier(pairs, model);
  std::vector<std::string> want;
  for (const auto& pair : pairs) {
    // Scalar recompute: hash features, accumulate signs, normalize, dot.
    std::map<std::uint32_t, double> acc;
    for (const auto& f : FeatureStrings(pair.question, pair.options)) {
      acc[BucketIndex(f)] += BucketSign(f);
    }
    double norm = 0.0;
    for (const auto& [i, v] : acc) norm += v * v;
    double z = model.bias;
    for (const auto& [i, v] : acc) z += model.weights[i] * v / std::sqrt(norm);
    if (1.0 / (1.0 + std::exp(-z)) >= 0.5) want.push_back(pair.pair_id);
  }
  std::vector<std::string> got;
  for (const auto& pair : result.kept) got.push_back(pair.pair_id);
  EXPECT_EQ(got, want);
  EXPECT_EQ(result.dropped, pairs.size() - want.size());
  EXPECT_GT(want.size(), 0u);
  EXPECT_LT(want.size(), pairs.size());
}

std::vector<LabeledExample> Separable(size_t n, Rng& rng) {
  const char* yes[] = {"lesion", "arrow", "shown", "organ"};
  const char* no[] = {"patients", "percentage", "study", "cohort"};
  std::vector<LabeledExample> out;
  for (size_t i = 0; i < n; ++i) {
    const int label = static_cast<int>(i % 2);
    const auto& words = label ? yes : no;
    const std::string q = std::string("Which ") + words[rng.UniformIndex(4)] + " " +
                          words[rng.UniformIndex(4)] + "?";
    out.push_back({Featurize(q, {"a", "b", "c", "d"}), label});
  }
  return out;
}

TEST(Train, LearnsSeparableFixtureDeterministically) {
  Rng rng(8);
  const auto train = Separable(200, rng);
  const auto heldout = Separable(60, rng);
  Hyper hyper;
  const auto model = TrainAndEvaluate(train, heldout, hyper);
  EXPECT_GE(model.report.heldout_accuracy, 0.99);
  EXPECT_GE(Evaluate(model, train), Evaluate(ClassifierModel(), train));
  EXPECT_EQ(model.report.n_train, 200u);
  for (size_t i = 1; i < model.report.loss_history.size(); ++i) {
    EXPECT_LE(model.report.loss_history[i], model.report.loss_history[i - 1] + 1e-12);
  }
  for (const auto& ex : train) {
    EXPECT_EQ(Predict(model, ex.x) >= 0.5, ex.label == 1);
  }
  const auto again = Train(train, hyper);
  EXPECT_EQ(std::bit_cast<std::uint64_t>(again.bias), std::bit_cast<std::uint64_t>(model.bias));
  EXPECT_TRUE(std::equal(again.weights.begin(), again.weights.end(), model.weights.begin()));
}

TEST(Train, Preconditions) {
  Rng rng(1);
  auto one_class = Separable(10, rng);
  for (auto& ex : one_class) ex.label = 1;
  EXPECT_THROW(Train(one_class, {}), PreconditionError);
  EXPECT_THROW(Train({}, {}), PreconditionError);
  EXPECT_THROW(Evaluate(ClassifierModel(), {}), PreconditionError);
}

TEST(Evaluate, ConstantModelScoresClassOnePrevalence) {
  Rng rng(2);
  auto examples = Separable(40, rng);
  for (size_t i = 0; i < examples.size(); ++i) examples[i].label = i % 4 == 0 ? 1 : 0;
  EXPECT_DOUBLE_EQ(Evaluate(ClassifierModel(), examples), 0.25);
}

TEST(SplitLabels, ProtocolSizes) {
  std::vector<LabeledPair> labels;
  for (int i = 0; i < 2192; ++i) labels.push_back({"p" + std::to_string(i), i % 3 == 0});
  auto split = SplitLabels(labels, 4);
  EXPECT_EQ(split.train.size(), 1752u);
  EXPECT_EQ(split.test.size(), 440u);
  auto shuffled = labels;
  std::reverse(shuffled.begin(), shuffled.end());
  EXPECT_EQ(SplitLabels(shuffled, 4).test, split.test);
  labels.resize(101);
  split = SplitLabels(labels, 4);
  EXPECT_EQ(split.test.size(), 20u);
  EXPECT_EQ(split.train.size(), 81u);
  EXPECT_THROW(LabeledPairFromJson(Json{{"pair_id", "x"}, {"label", 2}}), DataError);
}

TEST(ModelJson, RoundTripIsBitExact) {
  Rng rng(3);
  const auto model = Train(Separable(50, rng), {});
  const auto back = ModelFromJson(ToJson(model));
  EXPECT_EQ(std::bit_cast<std::uint64_t>(back.bias), std::bit_cast<std::uint64_t>(model.bias));
  EXPECT_TRUE(std::equal(back.weights.begin(), back.weights.end(), model.weights.begin(),
                         [](double a, double b) {
                           return std::bit_cast<std::uint64_t>(a) ==
                                  std::bit_cast<std::uint64_t>(b);
                         }));
  EXPECT_EQ(back.threshold, model.threshold);
  Json bad = ToJson(model);
  bad["weights_le_f64_base64"] = "AAAA";
  EXPECT_THROW(ModelFromJson(bad), DataError);
}

TEST(Objective, LipschitzBoundDominatesCurvature) {
  Rng rng(6);
  const auto examples = Separable(30, rng);
  const LogisticObjective objective(examples, kFeatureDim, 1e-3);
  double max_norm = 0.0;
  for (const auto& ex : examples) max_norm = std::max(max_norm, SquaredNorm(ex.x));
  EXPECT_DOUBLE_EQ(objective.LipschitzBound(), (max_norm + 1.0) / 4.0 + 1e-3);
}

}  // namespace
}  // namespace vqacurate::answerability

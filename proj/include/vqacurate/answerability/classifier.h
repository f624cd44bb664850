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

#ifndef VQACURATE_ANSWERABILITY_CLASSIFIER_H_
#define VQACURATE_ANSWERABILITY_CLASSIFIER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vqacurate/answerability/features.h"
#include "vqacurate/common/jsonl.h"
#include "vqacurate/qagen/qa_pair.h"

namespace vqacurate::answerability {

// Human label for one pair: 1 = answerable from the image alone.
struct LabeledPair {
  std::string pair_id;
  int label = 0;

  bool operator==(const LabeledPair&) const = default;
};

Json ToJson(const LabeledPair& labeled);
// Throws DataError unless label is 0 or 1.
LabeledPair LabeledPairFromJson(const Json& json);

struct LabeledExample {
  FeatureVector x;
  int label = 0;
};

struct Hyper {
  double learning_rate = 1.0;
  double l2_lambda = 1e-4;
  int epochs = 200;
  std::uint64_t seed = 0;  // Only used to split labels; training is full-batch.
};

struct TrainingReport {
  double final_loss = 0.0;
  double heldout_accuracy = -1.0;  // -1 when no heldout set was given.
  double lipschitz_bound = 0.0;
  std::vector<double> loss_history;  // Loss before each epoch, then final.
  size_t n_train = 0;
  size_t n_heldout = 0;
};

struct ClassifierModel {
  std::vector<double> weights = std::vector<double>(kFeatureDim, 0.0);
  double bias = 0.0;
  Hyper hyper;
  TrainingReport report;
  FeatureOptions features;
  double threshold = 0.5;  // Keep when probability >= threshold.
};

// Mean logistic loss plus (l2/2)*||w||^2 over sparse examples; the bias is
// not regularized.
class LogisticObjective {
 public:
  LogisticObjective(std::span<const LabeledExample> examples, size_t dim,
                    double l2_lambda);

  double Loss(std::span<const double> weights, double bias) const;
  // Writes the gradient into grad_weights (size dim) and grad_bias.
  void Gradient(std::span<const double> weights, double bias,
                std::span<double> grad_weights, double& grad_bias) const;
  // Upper bound on the gradient's Lipschitz constant:
  // max_i (||x_i||^2 + 1) / 4 + l2_lambda.
  double LipschitzBound() const;

 private:
  std::span<const LabeledExample> examples_;
  size_t dim_;
  double l2_lambda_;
};

double Sigmoid(double z);

// Full-batch gradient descent from zero for hyper.epochs iterations.
// Throws PreconditionError on empty input or when only one class is present.
ClassifierModel Train(const std::vector<LabeledExample>& train, const Hyper& hyper,
                      const FeatureOptions& features = {});

// Train, then fill report.heldout_accuracy from `heldout`.
ClassifierModel TrainAndEvaluate(const std::vector<LabeledExample>& train,
                                 const std::vector<LabeledExample>& heldout,
                                 const Hyper& hyper,
                                 const FeatureOptions& features = {});

// sigmoid(w.x + b).
double Predict(const ClassifierModel& model, const FeatureVector& x);
double PredictPair(const ClassifierModel& model, const qagen::QAPair& pair);

// Fraction of examples where (p >= threshold) == (label == 1). Throws
// PreconditionError on empty input.
double Evaluate(const ClassifierModel& model,
                const std::vector<LabeledExample>& heldout);

struct ClassifierFilterResult {
  std::vector<qagen::QAPair> kept;  // stage = kKeptByClassifier
  size_t dropped = 0;
  double pairs_per_image = 0.0;  // Over kept pairs; 0 when none kept.
};

ClassifierFilterResult ApplyClassifier(const std::vector<qagen::QAPair>& pairs,
                                       const ClassifierModel& model);

struct LabelSplit {
  std::vector<LabeledPair> train;
  std::vector<LabeledPair> test;
};

// Shuffles labels (sorted by pair_id first) with the seed. With at least 2192
// labels the split is 1752 train / 440 test; otherwise 80/20 with the test
// size rounded to nearest.
LabelSplit SplitLabels(std::vector<LabeledPair> labels, std::uint64_t seed);

// Weights travel as base64 of the little-endian float64 array.
Json ToJson(const ClassifierModel& model);
ClassifierModel ModelFromJson(const Json& json);

}  // namespace vqacurate::answerability

#endif  // VQACURATE_ANSWERABILITY_CLASSIFIER_H_

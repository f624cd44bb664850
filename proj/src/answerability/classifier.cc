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

#include "vqacurate/answerability/classifier.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"
#include "vqacurate/common/random.h"

namespace vqacurate::answerability {

namespace {

constexpr size_t kLabelTrain = 1752;
constexpr size_t kLabelTest = 440;

// log(1 + e^z) without overflow.
double Softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

void CheckFinite(const ClassifierModel& model) {
  if (!std::isfinite(model.bias) ||
      !std::all_of(model.weights.begin(), model.weights.end(),
                   [](double w) { return std::isfinite(w); })) {
    throw DataError("classifier parameters are not finite");
  }
}

std::string EncodeWeights(const std::vector<double>& weights) {
  std::vector<std::uint8_t> bytes(weights.size() * 8);
  for (size_t i = 0; i < weights.size(); ++i) {
    const auto bits = std::bit_cast<std::uint64_t>(weights[i]);
    for (int b = 0; b < 8; ++b) bytes[i * 8 + b] = static_cast<std::uint8_t>(bits >> (8 * b));
  }
  return Base64Encode(bytes);
}

std::vector<double> DecodeWeights(const std::string& encoded, size_t dim) {
  const std::string bytes = Base64Decode(encoded);
  if (bytes.size() != dim * 8) throw DataError("weight array has the wrong length");
  std::vector<double> weights(dim);
  for (size_t i = 0; i < dim; ++i) {
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b) {
      bits = (bits << 8) | static_cast<std::uint8_t>(bytes[i * 8 + b]);
    }
    weights[i] = std::bit_cast<double>(bits);
  }
  return weights;
}

}  // namespace

Json ToJson(const LabeledPair& labeled) {
  return Json{{"pair_id", labeled.pair_id}, {"label", labeled.label}};
}

LabeledPair LabeledPairFromJson(const Json& json) {
  try {
    LabeledPair labeled{json.at("pair_id").get<std::string>(),
                        json.at("label").get<int>()};
    if (labeled.label != 0 && labeled.label != 1) {
      throw DataError("label for '" + labeled.pair_id + "' is not 0 or 1");
    }
    return labeled;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed label row: ") + e.what());
  }
}

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

LogisticObjective::LogisticObjective(std::span<const LabeledExample> examples,
                                     size_t dim, double l2_lambda)
    : examples_(examples), dim_(dim), l2_lambda_(l2_lambda) {}

double LogisticObjective::Loss(std::span<const double> weights, double bias) const {
  double data = 0.0;
  for (const auto& ex : examples_) {
    double z = bias;
    for (const auto& [index, value] : ex.x.entries) z += weights[index] * value;
    data += Softplus(z) - ex.label * z;
  }
  double reg = 0.0;
  for (size_t j = 0; j < dim_; ++j) reg += weights[j] * weights[j];
  return data / static_cast<double>(examples_.size()) + 0.5 * l2_lambda_ * reg;
}

void LogisticObjective::Gradient(std::span<const double> weights, double bias,
                                 std::span<double> grad_weights,
                                 double& grad_bias) const {
  const double inv_n = 1.0 / static_cast<double>(examples_.size());
  for (size_t j = 0; j < dim_; ++j) grad_weights[j] = l2_lambda_ * weights[j];
  grad_bias = 0.0;
  for (const auto& ex : examples_) {
    double z = bias;
    for (const auto& [index, value] : ex.x.entries) z += weights[index] * value;
    const double residual = (Sigmoid(z) - ex.label) * inv_n;
    for (const auto& [index, value] : ex.x.entries) {
      grad_weights[index] += residual * value;
    }
    grad_bias += residual;
  }
}

double LogisticObjective::LipschitzBound() const {
  double max_norm = 0.0;
  for (const auto& ex : examples_) max_norm = std::max(max_norm, SquaredNorm(ex.x));
  return 0.25 * (max_norm + 1.0) + l2_lambda_;
}

ClassifierModel Train(const std::vector<LabeledExample>& train, const Hyper& hyper,
                      const FeatureOptions& features) {
  if (train.empty()) throw PreconditionError("no training examples");
  std::set<int> classes;
  for (const auto& ex : train) {
    if (ex.label != 0 && ex.label != 1) {
      throw PreconditionError("labels must be 0 or 1");
    }
    classes.insert(ex.label);
  }
  if (classes.size() < 2) {
    throw PreconditionError("training data holds a single class");
  }
  if (hyper.epochs < 0) throw PreconditionError("epochs must be >= 0");

  ClassifierModel model;
  model.hyper = hyper;
  model.features = features;
  const LogisticObjective objective(train, kFeatureDim, hyper.l2_lambda);
  model.report.lipschitz_bound = objective.LipschitzBound();
  model.report.n_train = train.size();
  if (hyper.learning_rate > 1.0 / model.report.lipschitz_bound) {
    spdlog::warn("learning rate {} exceeds 1/L = {}; loss may not decrease",
                 hyper.learning_rate, 1.0 / model.report.lipschitz_bound);
  }

  std::vector<double> grad(kFeatureDim);
  double grad_bias = 0.0;
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    model.report.loss_history.push_back(objective.Loss(model.weights, model.bias));
    objective.Gradient(model.weights, model.bias, grad, grad_bias);
    for (size_t j = 0; j < kFeatureDim; ++j) {
      model.weights[j] -= hyper.learning_rate * grad[j];
    }
    model.bias -= hyper.learning_rate * grad_bias;
  }
  model.report.final_loss = objective.Loss(model.weights, model.bias);
  model.report.loss_history.push_back(model.report.final_loss);
  CheckFinite(model);
  spdlog::info("classifier trained: {} examples, {} epochs, final loss {:.6f}, L={:.4f}",
               train.size(), hyper.epochs, model.report.final_loss,
               model.report.lipschitz_bound);
  return model;
}

ClassifierModel TrainAndEvaluate(const std::vector<LabeledExample>& train,
                                 const std::vector<LabeledExample>& heldout,
                                 const Hyper& hyper, const FeatureOptions& features) {
  ClassifierModel model = Train(train, hyper, features);
  if (!heldout.empty()) {
    model.report.heldout_accuracy = Evaluate(model, heldout);
    model.report.n_heldout = heldout.size();
  }
  return model;
}

double Predict(const ClassifierModel& model, const FeatureVector& x) {
  return Sigmoid(Dot(x, model.weights) + model.bias);
}

double PredictPair(const ClassifierModel& model, const qagen::QAPair& pair) {
  return Predict(model, Featurize(pair.question, pair.options, model.features));
}

double Evaluate(const ClassifierModel& model,
                const std::vector<LabeledExample>& heldout) {
  if (heldout.empty()) throw PreconditionError("empty evaluation set");
  size_t correct = 0;
  for (const auto& ex : heldout) {
    const int predicted = Predict(model, ex.x) >= model.threshold ? 1 : 0;
    if (predicted == ex.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(heldout.size());
}

ClassifierFilterResult ApplyClassifier(const std::vector<qagen::QAPair>& pairs,
                                       const ClassifierModel& model) {
  ClassifierFilterResult result;
  std::set<std::string> images;
  for (const auto& pair : pairs) {
    if (PredictPair(model, pair) >= model.threshold) {
      qagen::QAPair copy = pair;
      copy.stage = qagen::Stage::kKeptByClassifier;
      images.insert(copy.record_id);
      result.kept.push_back(std::move(copy));
    } else {
      ++result.dropped;
    }
  }
  if (!images.empty()) {
    result.pairs_per_image =
        static_cast<double>(result.kept.size()) / static_cast<double>(images.size());
  }
  spdlog::info(
      "classifier kept {} and dropped {} pairs; {:.2f} pairs per image "
      "(full-scale reference: 3.93)",
      result.kept.size(), result.dropped, result.pairs_per_image);
  return result;
}

LabelSplit SplitLabels(std::vector<LabeledPair> labels, std::uint64_t seed) {
  std::sort(labels.begin(), labels.end(),
            [](const auto& a, const auto& b) { return a.pair_id < b.pair_id; });
  Rng rng(DeriveSeed(seed, {"label-split"}));
  rng.Shuffle(labels);
  size_t n_train = 0;
  size_t n_test = 0;
  if (labels.size() >= kLabelTrain + kLabelTest) {
    n_train = kLabelTrain;
    n_test = kLabelTest;
  } else {
    n_test = static_cast<size_t>(std::llround(0.2 * static_cast<double>(labels.size())));
    n_train = labels.size() - n_test;
  }
  LabelSplit split;
  split.train.assign(labels.begin(), labels.begin() + static_cast<long>(n_train));
  split.test.assign(labels.begin() + static_cast<long>(n_train),
                    labels.begin() + static_cast<long>(n_train + n_test));
  return split;
}

Json ToJson(const ClassifierModel& model) {
  return Json{
      {"format", "hashed-logistic-regression/v1"},
      {"dim", kFeatureDim},
      {"weights_le_f64_base64", EncodeWeights(model.weights)},
      {"bias", model.bias},
      {"threshold", model.threshold},
      {"include_options", model.features.include_options},
      {"hyper",
       {{"learning_rate", model.hyper.learning_rate},
        {"l2_lambda", model.hyper.l2_lambda},
        {"epochs", model.hyper.epochs},
        {"seed", model.hyper.seed}}},
      {"training_report",
       {{"final_loss", model.report.final_loss},
        {"heldout_accuracy", model.report.heldout_accuracy < 0
                                 ? Json(nullptr)
                                 : Json(model.report.heldout_accuracy)},
        {"lipschitz_bound", model.report.lipschitz_bound},
        {"n_train", model.report.n_train},
        {"n_heldout", model.report.n_heldout}}}};
}

ClassifierModel ModelFromJson(const Json& json) {
  try {
    if (json.at("dim").get<std::uint32_t>() != kFeatureDim) {
      throw DataError("model dimension does not match 2^18");
    }
    ClassifierModel model;
    model.weights =
        DecodeWeights(json.at("weights_le_f64_base64").get<std::string>(), kFeatureDim);
    model.bias = json.at("bias").get<double>();
    model.threshold = json.value("threshold", 0.5);
    model.features.include_options = json.value("include_options", true);
    const Json& hyper = json.at("hyper");
    model.hyper.learning_rate = hyper.at("learning_rate").get<double>();
    model.hyper.l2_lambda = hyper.at("l2_lambda").get<double>();
    model.hyper.epochs = hyper.at("epochs").get<int>();
    model.hyper.seed = hyper.at("seed").get<std::uint64_t>();
    const Json& report = json.at("training_report");
    model.report.final_loss = report.at("final_loss").get<double>();
    model.report.heldout_accuracy =
        report.at("heldout_accuracy").is_null() ? -1.0
                                                : report.at("heldout_accuracy").get<double>();
    model.report.lipschitz_bound = report.at("lipschitz_bound").get<double>();
    model.report.n_train = report.at("n_train").get<size_t>();
    model.report.n_heldout = report.at("n_heldout").get<size_t>();
    CheckFinite(model);
    return model;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed classifier model: ") + e.what());
  }
}

}  // namespace vqacurate::answerability

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

#ifndef VQACURATE_EVAL_EVAL_H_
#define VQACURATE_EVAL_EVAL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqacurate/common/jsonl.h"
#include "vqacurate/eval/bleu.h"
#include "vqacurate/eval/bootstrap.h"
#include "vqacurate/qagen/qa_pair.h"

namespace vqacurate::eval {

enum class Task { kChoice, kBlanking };

std::string_view TaskName(Task task);
// UsageError for anything but "choice" or "blanking".
Task ParseTask(std::string_view name);

struct Prediction {
  std::string pair_id;
  std::string text;
};

Prediction PredictionFromJson(const Json& json);
std::vector<Prediction> ReadPredictions(const std::string& path);

struct SampleScore {
  std::string pair_id;
  bool has_prediction = false;
  char chosen = 0;  // 'A'-'D', 0 when there is no prediction.
  bool correct = false;
  Bleu1Breakdown bleu1;
};

// One score per gold pair, in gold order. Missing predictions score as
// incorrect with an empty candidate. DataError when a pair has two
// predictions or a prediction names a pair outside the gold split.
std::vector<SampleScore> ScoreSamples(const std::vector<Prediction>& predictions,
                                      const std::vector<qagen::QAPair>& gold, Task task);

// Fraction of correct samples, 0 for an empty gold split.
double Accuracy(const std::vector<Prediction>& predictions,
                const std::vector<qagen::QAPair>& gold, Task task);

struct ScoreWithCi {
  double point = 0.0;
  Interval ci;
};

struct EvalReport {
  Task task = Task::kChoice;
  size_t n = 0;
  size_t n_predicted = 0;
  ScoreWithCi acc;
  Bleu1Breakdown bleu1;  // Corpus level.
  ScoreWithCi bleu1_corpus;
  ScoreWithCi bleu1_macro;
  BootstrapSettings bootstrap;
  std::vector<SampleScore> per_sample;
};

// Scores and attaches percentile bootstrap intervals. Each interval is
// widened, if needed, to contain its point estimate. PreconditionError on an
// empty gold split.
EvalReport Evaluate(const std::vector<Prediction>& predictions,
                    const std::vector<qagen::QAPair>& gold, Task task,
                    const BootstrapSettings& bootstrap, bool keep_per_sample = true);

Json ToJson(const EvalReport& report);

}  // namespace vqacurate::eval

#endif  // VQACURATE_EVAL_EVAL_H_

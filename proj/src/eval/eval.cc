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

#include "vqacurate/eval/eval.h"

#include <algorithm>
#include <map>

#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/parallel.h"
#include "vqacurate/eval/similarity.h"

namespace vqacurate::eval {
namespace {

Json IntervalJson(const ScoreWithCi& score) {
  return Json{{"point", score.point}, {"lo", score.ci.lo}, {"hi", score.ci.hi}};
}

Json BleuJson(const Bleu1Breakdown& b) {
  return Json{{"clipped_matches", b.clipped_matches},
              {"candidate_len", b.candidate_len},
              {"reference_len", b.reference_len},
              {"precision", b.precision},
              {"brevity_penalty", b.brevity_penalty},
              {"score", b.score}};
}

ScoreWithCi WithCi(double point, Interval ci) {
  ci.lo = std::min(ci.lo, point);
  ci.hi = std::max(ci.hi, point);
  return {point, ci};
}

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kChoice ? "choice" : "blanking";
}

Task ParseTask(std::string_view name) {
  if (name == "choice") return Task::kChoice;
  if (name == "blanking") return Task::kBlanking;
  throw UsageError("unknown task '" + std::string(name) + "' (expected choice or blanking)");
}

Prediction PredictionFromJson(const Json& json) {
  try {
    return {json.at("pair_id").get<std::string>(), json.at("text").get<std::string>()};
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed prediction: ") + e.what());
  }
}

std::vector<Prediction> ReadPredictions(const std::string& path) {
  std::vector<Prediction> out;
  for (const Json& row : ReadJsonlFile(path)) out.push_back(PredictionFromJson(row));
  return out;
}

std::vector<SampleScore> ScoreSamples(const std::vector<Prediction>& predictions,
                                      const std::vector<qagen::QAPair>& gold, Task task) {
  std::map<std::string, size_t> gold_index;
  for (size_t i = 0; i < gold.size(); ++i) gold_index.emplace(gold[i].pair_id, i);
  std::vector<const Prediction*> by_gold(gold.size(), nullptr);
  for (const auto& prediction : predictions) {
    auto it = gold_index.find(prediction.pair_id);
    if (it == gold_index.end()) {
      throw DataError("prediction for unknown pair '" + prediction.pair_id + "'");
    }
    if (by_gold[it->second] != nullptr) {
      throw DataError("pair '" + prediction.pair_id + "' has more than one prediction");
    }
    by_gold[it->second] = &prediction;
  }

  // Choice and blanking both score by matching the text to an option; the
  // task only changes how the report is labeled.
  (void)task;
  std::vector<SampleScore> scores(gold.size());
  ParallelFor(gold.size(), std::thread::hardware_concurrency(), [&](size_t i) {
    SampleScore& s = scores[i];
    s.pair_id = gold[i].pair_id;
    const std::string candidate = by_gold[i] ? by_gold[i]->text : std::string();
    if (by_gold[i] != nullptr) {
      s.has_prediction = true;
      s.chosen = MatchToOption(candidate, gold[i].options);
      s.correct = s.chosen == gold[i].answer_letter;
    }
    s.bleu1 = SentenceBleu1(candidate, gold[i].answer_text());
  });
  return scores;
}

double Accuracy(const std::vector<Prediction>& predictions,
                const std::vector<qagen::QAPair>& gold, Task task) {
  if (gold.empty()) return 0.0;
  const auto scores = ScoreSamples(predictions, gold, task);
  const auto correct = std::count_if(scores.begin(), scores.end(),
                                     [](const SampleScore& s) { return s.correct; });
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

EvalReport Evaluate(const std::vector<Prediction>& predictions,
                    const std::vector<qagen::QAPair>& gold, Task task,
                    const BootstrapSettings& bootstrap, bool keep_per_sample) {
  if (gold.empty()) throw PreconditionError("cannot evaluate against an empty gold split");
  EvalReport report;
  report.task = task;
  report.n = gold.size();
  report.bootstrap = bootstrap;
  auto scores = ScoreSamples(predictions, gold, task);

  std::vector<double> correct(scores.size());
  std::vector<double> sentence(scores.size());
  std::vector<Bleu1Breakdown> counts(scores.size());
  for (size_t i = 0; i < scores.size(); ++i) {
    correct[i] = scores[i].correct ? 1.0 : 0.0;
    sentence[i] = scores[i].bleu1.score;
    counts[i] = scores[i].bleu1;
    if (scores[i].has_prediction) ++report.n_predicted;
  }

  double acc = 0.0;
  double macro = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    acc += correct[i];
    macro += sentence[i];
  }
  acc /= static_cast<double>(scores.size());
  macro /= static_cast<double>(scores.size());

  report.bleu1 = CorpusBleu1(counts);
  if (report.bleu1.candidate_len == 0) {
    spdlog::warn("every candidate is empty; BLEU-1 is 0");
  }
  report.acc = WithCi(acc, BootstrapCi(correct, bootstrap));
  report.bleu1_macro = WithCi(macro, BootstrapCi(sentence, bootstrap));
  report.bleu1_corpus = WithCi(
      report.bleu1.score,
      BootstrapCi(
          counts.size(),
          [&counts](std::span<const size_t> indices) {
            Bleu1Breakdown total;
            for (size_t i : indices) {
              total.clipped_matches += counts[i].clipped_matches;
              total.candidate_len += counts[i].candidate_len;
              total.reference_len += counts[i].reference_len;
            }
            FinishBleu1(total);
            return total.score;
          },
          bootstrap));
  if (keep_per_sample) report.per_sample = std::move(scores);
  return report;
}

Json ToJson(const EvalReport& report) {
  Json per_sample = Json::array();
  for (const auto& s : report.per_sample) {
    per_sample.push_back(Json{{"pair_id", s.pair_id},
                              {"has_prediction", s.has_prediction},
                              {"chosen", s.chosen ? Json(std::string(1, s.chosen)) : Json()},
                              {"correct", s.correct},
                              {"bleu1", s.bleu1.score}});
  }
  return Json{{"task", TaskName(report.task)},
              {"n", report.n},
              {"n_predicted", report.n_predicted},
              {"acc", IntervalJson(report.acc)},
              {"bleu1",
               {{"corpus", IntervalJson(report.bleu1_corpus)},
                {"macro", IntervalJson(report.bleu1_macro)},
                {"breakdown", BleuJson(report.bleu1)}}},
              {"bootstrap",
               {{"B", report.bootstrap.resamples},
                {"alpha", report.bootstrap.alpha},
                {"seed", report.bootstrap.seed},
                {"method", "percentile"}}},
              {"per_sample", std::move(per_sample)}};
}

}  // namespace vqacurate::eval

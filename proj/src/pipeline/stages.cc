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

#include "vqacurate/pipeline/stages.h"

#include <algorithm>
#include <map>
#include <set>

#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"
#include "vqacurate/common/random.h"
#include "vqacurate/common/text.h"
#include "vqacurate/corpus/corpus.h"
#include "vqacurate/qagen/parser.h"
#include "vqacurate/splitter/splitter.h"
#include "vqacurate/stats/stats.h"
#include "vqacurate/textfilter/textfilter.h"

namespace vqacurate::pipeline {
namespace {

using qagen::QAPair;
using qagen::Stage;

constexpr char kCorpus[] = "corpus.jsonl";
constexpr char kCorpusManifest[] = "corpus.manifest.json";
constexpr char kIngestIssues[] = "ingest_issues.jsonl";
constexpr char kGenerations[] = "generations.jsonl";
constexpr char kPairsGenerated[] = "pairs.generated.jsonl";
constexpr char kParseIssues[] = "parse_issues.jsonl";
constexpr char kTextVerdicts[] = "verdicts.textfilter.jsonl";
constexpr char kPairsTextFiltered[] = "pairs.textfiltered.jsonl";
constexpr char kPartition[] = "filter_partition.json";
constexpr char kLabels[] = "labels.jsonl";
constexpr char kModel[] = "classifier.model.json";
constexpr char kPairsClassified[] = "pairs.classified.jsonl";
constexpr char kSplit[] = "split.json";
constexpr char kTrain[] = "train.jsonl";
constexpr char kTestInitial[] = "test_initial.jsonl";
constexpr char kReviewCandidates[] = "review_candidates.jsonl";
constexpr char kTestClean[] = "test_clean.jsonl";
constexpr char kReport[] = "report.json";
constexpr char kQuestionLengths[] = "question_lengths.csv";
constexpr char kAnswerLengths[] = "answer_lengths.csv";
constexpr char kBaseline[] = "predictions.baseline.jsonl";
constexpr char kEvalReport[] = "eval_report.json";

void Record(const PipelineConfig& c, StageManifest& m, const std::string& file,
            bool primary = false) {
  m.outputs[file] = Sha256FileHex(c.Stage(file));
  if (primary) m.primary_output = file;
}

std::vector<QAPair> ReadPairs(const PipelineConfig& c, const std::string& file) {
  return qagen::ReadPairsFile(c.Stage(file).string());
}

void WritePairs(const PipelineConfig& c, const std::string& file, const std::vector<QAPair>& pairs) {
  qagen::WritePairsFile(c.Stage(file).string(), pairs);
}

template <typename T>
std::vector<Json> JsonRows(const std::vector<T>& items) {
  std::vector<Json> rows;
  rows.reserve(items.size());
  for (const auto& item : items) rows.push_back(ToJson(item));
  return rows;
}

// Pairs from `pairs` in the order of `ids`, with their stage set.
std::vector<QAPair> Select(const std::map<std::string, const QAPair*>& by_id,
                           const std::vector<std::string>& ids, Stage stage) {
  std::vector<QAPair> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    QAPair pair = *by_id.at(id);
    pair.stage = stage;
    out.push_back(std::move(pair));
  }
  return out;
}

corpus::Corpus ReadCorpus(const PipelineConfig& c) {
  auto result = corpus::Ingest(ReadFile(c.Stage(kCorpus)), corpus::SourceFormat::kJsonl);
  if (!result.issues.empty()) {
    throw DataError(std::string(kCorpus) + " has " + std::to_string(result.issues.size()) +
                    " invalid rows; rerun ingest");
  }
  return std::move(result.corpus);
}

std::uint64_t MockSeed(const PipelineConfig& c) {
  return c.generation.mock_seed.value_or(c.run_seed);
}

std::uint64_t EvalSeed(const PipelineConfig& c) { return c.eval.seed.value_or(c.run_seed); }

// ---- ingest ---------------------------------------------------------------

void RunIngest(const PipelineConfig& c, StageManifest& m) {
  if (!std::filesystem::exists(c.source)) {
    throw PreconditionError("source file " + c.source.string() + " does not exist");
  }
  auto result = corpus::Ingest(ReadFile(c.source), c.source_format);
  for (const auto& issue : result.issues) {
    spdlog::warn("ingest row {}: {} ({})", issue.row, issue.kind, issue.message);
  }
  WriteFileAtomic(c.Stage(kCorpus), result.corpus.Serialize());
  WriteJsonFile(c.Stage(kCorpusManifest), corpus::ManifestJson(result.corpus, result.issues.size()));
  WriteJsonlFile(c.Stage(kIngestIssues), JsonRows(result.issues));
  Record(c, m, kCorpus, true);
  Record(c, m, kCorpusManifest);
  Record(c, m, kIngestIssues);
  m.counts_in["rows"] = result.corpus.size() + result.issues.size();
  m.counts_out["records"] = result.corpus.size();
  m.counts_out["issues"] = result.issues.size();
}

// ---- generate -------------------------------------------------------------

void RunGenerate(const PipelineConfig& c, StageManifest& m) {
  const auto corpus = ReadCorpus(c);
  auto client = MakeGenerationClient(c);
  qagen::RetryPolicy policy;
  policy.max_retries = c.generation.max_retries;
  const auto generations = qagen::GenerateAll(*client, corpus.records(), c.generation.params,
                                              policy, c.generation.concurrency);
  const auto failed = std::count_if(generations.begin(), generations.end(),
                                    [](const qagen::RawGeneration& g) { return g.failed; });
  if (failed > 0) spdlog::warn("{} of {} generations failed", failed, generations.size());
  WriteJsonlFile(c.Stage(kGenerations), JsonRows(generations));
  Record(c, m, kGenerations, true);
  m.counts_in["records"] = corpus.size();
  m.counts_out["generations"] = generations.size();
  m.counts_out["failed"] = static_cast<size_t>(failed);
}

// ---- parse ----------------------------------------------------------------

void RunParse(const PipelineConfig& c, StageManifest& m) {
  const auto corpus = ReadCorpus(c);
  std::map<std::string, std::string> image_refs;
  for (const auto& record : corpus.records()) image_refs[record.record_id] = record.image_ref;

  std::vector<QAPair> pairs;
  std::vector<Json> issues;
  size_t n_generations = 0;
  for (const Json& row : ReadJsonlFile(c.Stage(kGenerations))) {
    const auto generation = qagen::RawGenerationFromJson(row);
    ++n_generations;
    auto result = qagen::ParseAndDedup(generation);
    auto ref = image_refs.find(generation.record_id);
    if (ref == image_refs.end()) {
      throw DataError("generation for unknown record '" + generation.record_id + "'");
    }
    for (auto& pair : result.pairs) {
      pair.image_ref = ref->second;
      pairs.push_back(std::move(pair));
    }
    for (const auto& issue : result.issues) issues.push_back(ToJson(issue));
  }
  WritePairs(c, kPairsGenerated, pairs);
  WriteJsonlFile(c.Stage(kParseIssues), issues);
  Record(c, m, kPairsGenerated, true);
  Record(c, m, kParseIssues);
  m.counts_in["generations"] = n_generations;
  m.counts_out["pairs"] = pairs.size();
  m.counts_out["issues"] = issues.size();
  spdlog::info("parsed {} pairs from {} generations (full-scale reference: 1,497,808 pairs)",
               pairs.size(), n_generations);
}

// ---- filter-text ----------------------------------------------------------

void RunFilterText(const PipelineConfig& c, StageManifest& m) {
  const auto pairs = ReadPairs(c, kPairsGenerated);
  if (pairs.empty()) throw PreconditionError("no generated pairs to filter");
  const auto partition = textfilter::PartitionForFilter(pairs, c.run_seed);
  auto answerer_a = MakeAnswerer(c, 'a', pairs);
  auto answerer_b = MakeAnswerer(c, 'b', pairs);
  const auto verdicts = textfilter::RunFilter(pairs, partition, *answerer_a, *answerer_b,
                                              c.run_seed, c.textfilter.concurrency);
  const auto kept = textfilter::ApplyFilter(pairs, verdicts);
  WriteJsonlFile(c.Stage(kTextVerdicts), JsonRows(verdicts));
  WritePairs(c, kPairsTextFiltered, kept);
  WriteJsonFile(c.Stage(kPartition), textfilter::ToJson(partition));
  Record(c, m, kPairsTextFiltered, true);
  Record(c, m, kTextVerdicts);
  Record(c, m, kPartition);
  m.counts_in["pairs"] = pairs.size();
  m.counts_out["kept"] = kept.size();
  m.counts_out["dismissed"] = pairs.size() - kept.size();
}

// ---- train-classifier -----------------------------------------------------

void RunTrainClassifier(const PipelineConfig& c, StageManifest& m) {
  const auto pairs = ReadPairs(c, kPairsTextFiltered);
  std::map<std::string, const QAPair*> by_id;
  for (const auto& pair : pairs) by_id[pair.pair_id] = &pair;

  std::vector<answerability::LabeledPair> labels;
  if (c.classifier.labels.empty()) {
    labels = SyntheticLabels(pairs, c.classifier.n_labels, c.run_seed);
    std::vector<Json> rows = JsonRows(labels);
    WriteJsonlFile(c.Stage(kLabels), rows);
    Record(c, m, kLabels);
  } else {
    for (const Json& row : ReadJsonlFile(c.classifier.labels)) {
      labels.push_back(answerability::LabeledPairFromJson(row));
    }
  }
  std::vector<answerability::LabeledPair> usable;
  for (const auto& label : labels) {
    if (by_id.contains(label.pair_id)) {
      usable.push_back(label);
    } else if (c.strict) {
      throw DataError("label for pair '" + label.pair_id + "' which is not in " +
                      kPairsTextFiltered);
    }
  }
  if (usable.size() < labels.size()) {
    spdlog::warn("{} labels name pairs outside {}; ignored", labels.size() - usable.size(),
                 kPairsTextFiltered);
  }

  const auto split = answerability::SplitLabels(usable, c.run_seed);
  answerability::FeatureOptions features{c.classifier.include_options};
  auto examples = [&](const std::vector<answerability::LabeledPair>& part) {
    std::vector<answerability::LabeledExample> out;
    out.reserve(part.size());
    for (const auto& label : part) {
      const QAPair& pair = *by_id.at(label.pair_id);
      out.push_back({answerability::Featurize(pair.question, pair.options, features), label.label});
    }
    return out;
  };
  answerability::Hyper hyper = c.classifier.hyper;
  hyper.seed = c.run_seed;
  auto model = answerability::TrainAndEvaluate(examples(split.train), examples(split.test), hyper,
                                                features);
  model.threshold = c.classifier.threshold;
  WriteJsonFile(c.Stage(kModel), answerability::ToJson(model));
  Record(c, m, kModel, true);
  m.counts_in["labels"] = usable.size();
  m.counts_out["train"] = split.train.size();
  m.counts_out["heldout"] = split.test.size();
  if (model.report.heldout_accuracy >= 0.0) {
    spdlog::info("classifier heldout accuracy {:.4f} (full-scale reference: 0.8177)",
                 model.report.heldout_accuracy);
  }
}

// ---- filter-classifier ----------------------------------------------------

void RunFilterClassifier(const PipelineConfig& c, StageManifest& m) {
  const auto pairs = ReadPairs(c, kPairsTextFiltered);
  const auto model = answerability::ModelFromJson(ReadJsonFile(c.Stage(kModel)));
  const auto result = answerability::ApplyClassifier(pairs, model);
  WritePairs(c, kPairsClassified, result.kept);
  Record(c, m, kPairsClassified, true);
  m.counts_in["pairs"] = pairs.size();
  m.counts_out["kept"] = result.kept.size();
  m.counts_out["dropped"] = result.dropped;
}

// ---- split ----------------------------------------------------------------

void RunSplit(const PipelineConfig& c, StageManifest& m) {
  const auto pairs = ReadPairs(c, kPairsClassified);
  std::map<std::string, const QAPair*> by_id;
  for (const auto& pair : pairs) by_id[pair.pair_id] = &pair;

  auto assignment = splitter::SplitTrainTest(pairs, c.split.budgets, c.run_seed);
  assignment = splitter::SampleForReview(std::move(assignment), c.run_seed);
  std::vector<review::ReviewVerdict> verdicts;
  if (std::filesystem::exists(c.split.verdict_log)) {
    verdicts = review::ReadVerdictLog(c.split.verdict_log.string());
  } else if (!assignment.review_candidates.empty()) {
    spdlog::warn("no review verdicts at {}; the clean test set stays empty until review",
                 c.split.verdict_log.string());
  }
  splitter::FinalizeReport report;
  assignment = splitter::FinalizeCleanTest(std::move(assignment), verdicts, c.strict, {}, &report);

  WriteJsonFile(c.Stage(kSplit), splitter::ToJson(assignment));
  WritePairs(c, kTrain, Select(by_id, assignment.train, Stage::kTrain));
  WritePairs(c, kTestInitial, Select(by_id, assignment.test_initial, Stage::kTestInitial));
  WritePairs(c, kReviewCandidates,
             Select(by_id, assignment.review_candidates, Stage::kReviewCandidate));
  WritePairs(c, kTestClean, Select(by_id, assignment.test_clean, Stage::kTestClean));
  Record(c, m, kSplit, true);
  Record(c, m, kTrain);
  Record(c, m, kTestInitial);
  Record(c, m, kReviewCandidates);
  Record(c, m, kTestClean);
  m.counts_in["pairs"] = pairs.size();
  m.counts_out["train"] = assignment.train.size();
  m.counts_out["test_initial"] = assignment.test_initial.size();
  m.counts_out["review_candidates"] = assignment.review_candidates.size();
  m.counts_out["test_clean"] = assignment.test_clean.size();
  m.counts_out["unresolved"] = report.unresolved;
}

// ---- stats ----------------------------------------------------------------

void RunStats(const PipelineConfig& c, StageManifest& m) {
  const auto final_pairs = ReadPairs(c, kPairsClassified);
  const auto report = stats::BuildReport(final_pairs);
  Json json = stats::ToJson(report);
  json["stage_counts"] = {
      {"generated", ReadPairs(c, kPairsGenerated).size()},
      {"kept_by_text_filter", ReadPairs(c, kPairsTextFiltered).size()},
      {"kept_by_classifier", final_pairs.size()},
      {"train", ReadPairs(c, kTrain).size()},
      {"test_initial", ReadPairs(c, kTestInitial).size()},
      {"test_clean", ReadPairs(c, kTestClean).size()}};
  json["full_scale_reference"]["stage_counts"] = {{"generated", 1497808},
                                                  {"kept_by_text_filter", 848433},
                                                  {"kept_by_classifier", 226946},
                                                  {"images", 149075}};
  WriteJsonFile(c.Stage(kReport), json);
  WriteFileAtomic(c.Stage(kQuestionLengths), stats::HistogramCsv(report.lengths.question));
  WriteFileAtomic(c.Stage(kAnswerLengths), stats::HistogramCsv(report.lengths.answer));
  Record(c, m, kReport, true);
  Record(c, m, kQuestionLengths);
  Record(c, m, kAnswerLengths);
  m.counts_in["pairs"] = final_pairs.size();
  m.counts_out["images"] = report.image_count;
}

// ---- eval -----------------------------------------------------------------

std::string GoldFile(const PipelineConfig& c) {
  if (std::filesystem::exists(c.Stage(kTestClean)) &&
      !ReadPairs(c, kTestClean).empty()) {
    return kTestClean;
  }
  return kTestInitial;
}

void RunEval(const PipelineConfig& c, StageManifest& m) {
  const std::string gold_file = GoldFile(c);
  const auto gold = ReadPairs(c, gold_file);
  std::vector<eval::Prediction> predictions;
  std::string source;
  if (c.eval.predictions.empty()) {
    predictions = BaselinePredictions(gold);
    std::vector<Json> rows;
    for (const auto& p : predictions) rows.push_back({{"pair_id", p.pair_id}, {"text", p.text}});
    WriteJsonlFile(c.Stage(kBaseline), rows);
    Record(c, m, kBaseline);
    source = kBaseline;
  } else {
    predictions = eval::ReadPredictions(c.eval.predictions.string());
    source = c.eval.predictions.string();
  }
  eval::BootstrapSettings bootstrap = c.eval.bootstrap;
  bootstrap.seed = EvalSeed(c);
  const auto report = eval::Evaluate(predictions, gold, c.eval.task, bootstrap);
  Json json = eval::ToJson(report);
  json["gold_split"] = gold_file;
  json["predictions"] = source;
  WriteJsonFile(c.Stage(kEvalReport), json);
  Record(c, m, kEvalReport, true);
  m.counts_in["gold"] = gold.size();
  m.counts_in["predictions"] = predictions.size();
  m.counts_out["correct"] = static_cast<size_t>(
      std::count_if(report.per_sample.begin(), report.per_sample.end(),
                    [](const eval::SampleScore& s) { return s.correct; }));
}

std::vector<StageDef> BuildStages() {
  auto in = [](const char* file) {
    return [file](const PipelineConfig& c) {
      return std::vector<StageInput>{{file, c.Stage(file), true}};
    };
  };
  std::vector<StageDef> stages;
  stages.push_back({"ingest",
                    [](const PipelineConfig& c) {
                      return std::vector<StageInput>{{"source", c.source, true}};
                    },
                    [](const PipelineConfig& c) {
                      return Json{{"source_format", c.source_format == corpus::SourceFormat::kCsv
                                                        ? "csv"
                                                        : "jsonl"}};
                    },
                    RunIngest});
  stages.push_back({"generate", in(kCorpus),
                    [](const PipelineConfig& c) {
                      Json p{{"backend", c.generation.backend},
                             {"params", qagen::ToJson(c.generation.params)},
                             {"max_retries", c.generation.max_retries}};
                      if (c.generation.backend == "mock") {
                        p["mock_seed"] = MockSeed(c);
                      } else {
                        p["url"] = c.generation.http.url;
                      }
                      return p;
                    },
                    RunGenerate});
  stages.push_back({"parse",
                    [](const PipelineConfig& c) {
                      return std::vector<StageInput>{{kGenerations, c.Stage(kGenerations), true},
                                                     {kCorpus, c.Stage(kCorpus), true}};
                    },
                    [](const PipelineConfig&) { return Json::object(); }, RunParse});
  stages.push_back({"filter-text", in(kPairsGenerated),
                    [](const PipelineConfig& c) {
                      return Json{{"run_seed", c.run_seed},
                                  {"answerer", c.textfilter.answerer},
                                  {"url_a", c.textfilter.url_a},
                                  {"url_b", c.textfilter.url_b}};
                    },
                    RunFilterText});
  stages.push_back({"train-classifier",
                    [](const PipelineConfig& c) {
                      std::vector<StageInput> inputs{
                          {kPairsTextFiltered, c.Stage(kPairsTextFiltered), true}};
                      if (!c.classifier.labels.empty()) {
                        inputs.push_back({"labels", c.classifier.labels, true});
                      }
                      return inputs;
                    },
                    [](const PipelineConfig& c) {
                      const auto& k = c.classifier;
                      return Json{{"run_seed", c.run_seed},
                                  {"synthetic", k.labels.empty()},
                                  {"n_labels", k.n_labels},
                                  {"learning_rate", k.hyper.learning_rate},
                                  {"l2_lambda", k.hyper.l2_lambda},
                                  {"epochs", k.hyper.epochs},
                                  {"include_options", k.include_options},
                                  {"threshold", k.threshold},
                                  {"strict", c.strict}};
                    },
                    RunTrainClassifier});
  stages.push_back({"filter-classifier",
                    [](const PipelineConfig& c) {
                      return std::vector<StageInput>{
                          {kPairsTextFiltered, c.Stage(kPairsTextFiltered), true},
                          {kModel, c.Stage(kModel), true}};
                    },
                    [](const PipelineConfig&) { return Json::object(); }, RunFilterClassifier});
  stages.push_back({"split",
                    [](const PipelineConfig& c) {
                      return std::vector<StageInput>{
                          {kPairsClassified, c.Stage(kPairsClassified), true},
                          {"verdict_log", c.split.verdict_log, false}};
                    },
                    [](const PipelineConfig& c) {
                      return Json{{"run_seed", c.run_seed},
                                  {"test_pairs", c.split.budgets.test_pairs},
                                  {"review_n", c.split.budgets.review_n},
                                  {"strict", c.strict}};
                    },
                    RunSplit});
  stages.push_back({"stats",
                    [](const PipelineConfig& c) {
                      std::vector<StageInput> inputs;
                      for (const char* f : {kPairsGenerated, kPairsTextFiltered, kPairsClassified,
                                            kTrain, kTestInitial, kTestClean}) {
                        inputs.push_back({f, c.Stage(f), true});
                      }
                      return inputs;
                    },
                    [](const PipelineConfig&) { return Json::object(); }, RunStats});
  stages.push_back({"eval",
                    [](const PipelineConfig& c) {
                      std::vector<StageInput> inputs{
                          {kTestInitial, c.Stage(kTestInitial), true},
                          {kTestClean, c.Stage(kTestClean), true}};
                      if (!c.eval.predictions.empty()) {
                        inputs.push_back({"predictions", c.eval.predictions, true});
                      }
                      return inputs;
                    },
                    [](const PipelineConfig& c) {
                      return Json{{"task", eval::TaskName(c.eval.task)},
                                  {"bootstrap", c.eval.bootstrap.resamples},
                                  {"alpha", c.eval.bootstrap.alpha},
                                  {"seed", EvalSeed(c)}};
                    },
                    RunEval});
  return stages;
}

}  // namespace

const std::vector<StageDef>& StageDefs() {
  static const std::vector<StageDef> stages = BuildStages();
  return stages;
}

std::vector<std::string> StageNames() {
  std::vector<std::string> names;
  for (const auto& stage : StageDefs()) names.push_back(stage.name);
  return names;
}

const StageDef& FindStage(const std::string& name) {
  for (const auto& stage : StageDefs()) {
    if (stage.name == name) return stage;
  }
  std::string known;
  for (const auto& stage : StageDefs()) known += (known.empty() ? "" : ", ") + stage.name;
  throw UsageError("unknown stage '" + name + "' (stages: " + known + ")");
}

int SyntheticAnswerabilityLabel(const QAPair& pair) {
  static const std::vector<std::string> kCaptionOnly = {
      "how many patients", "what percentage", "how many cases", "in the study",
      "according to the caption", "what proportion"};
  const std::string question = text::CaseFold(pair.question);
  for (const auto& cue : kCaptionOnly) {
    if (question.find(cue) != std::string::npos) return 0;
  }
  return 1;
}

std::vector<answerability::LabeledPair> SyntheticLabels(const std::vector<QAPair>& pairs,
                                                        size_t n, std::uint64_t seed) {
  std::vector<const QAPair*> pool;
  pool.reserve(pairs.size());
  for (const auto& pair : pairs) pool.push_back(&pair);
  std::sort(pool.begin(), pool.end(),
            [](const QAPair* a, const QAPair* b) { return a->pair_id < b->pair_id; });
  Rng rng(DeriveSeed(seed, {"synthetic-labels"}));
  rng.Shuffle(pool);
  pool.resize(std::min(n, pool.size()));
  std::vector<answerability::LabeledPair> labels;
  labels.reserve(pool.size());
  for (const QAPair* pair : pool) {
    labels.push_back({pair->pair_id, SyntheticAnswerabilityLabel(*pair)});
  }
  std::sort(labels.begin(), labels.end(),
            [](const auto& a, const auto& b) { return a.pair_id < b.pair_id; });
  return labels;
}

std::vector<eval::Prediction> BaselinePredictions(const std::vector<QAPair>& gold) {
  std::vector<eval::Prediction> out;
  out.reserve(gold.size());
  for (const auto& pair : gold) out.push_back({pair.pair_id, pair.options[0]});
  return out;
}

std::unique_ptr<qagen::GenerationClient> MakeGenerationClient(const PipelineConfig& c) {
  if (c.generation.backend == "mock") {
    return std::make_unique<qagen::MockGenerationClient>(MockSeed(c));
  }
  return std::make_unique<qagen::HttpGenerationClient>(c.generation.http);
}

std::unique_ptr<textfilter::Answerer> MakeAnswerer(const PipelineConfig& c, char part,
                                                   const std::vector<QAPair>& pairs) {
  const std::string& kind = c.textfilter.answerer;
  if (kind == "uniform") {
    return std::make_unique<textfilter::UniformRandomAnswerer>(
        DeriveSeed(c.run_seed, {"answerer", std::string(1, part)}));
  }
  if (kind == "oracle") return std::make_unique<textfilter::OracleAnswerer>(pairs);
  if (kind == "abstain") return std::make_unique<textfilter::AbstainAnswerer>();
  if (kind.starts_with("constant:") && kind.size() == 10 && qagen::LetterIndex(kind[9])) {
    return std::make_unique<textfilter::ConstantAnswerer>(kind[9]);
  }
  if (kind == "http") {
    const std::string& url =
        part == 'b' && !c.textfilter.url_b.empty() ? c.textfilter.url_b : c.textfilter.url_a;
    if (url.empty()) throw UsageError("textfilter.url_a is required for the http answerer");
    return std::make_unique<textfilter::HttpAnswerer>(url, c.textfilter.timeout_seconds,
                                                      c.textfilter.max_retries);
  }
  throw UsageError("unknown textfilter.answerer '" + kind + "'");
}

}  // namespace vqacurate::pipeline

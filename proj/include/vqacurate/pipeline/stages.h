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

#ifndef VQACURATE_PIPELINE_STAGES_H_
#define VQACURATE_PIPELINE_STAGES_H_

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vqacurate/answerability/classifier.h"
#include "vqacurate/eval/eval.h"
#include "vqacurate/pipeline/config.h"
#include "vqacurate/pipeline/manifest.h"
#include "vqacurate/qagen/client.h"
#include "vqacurate/textfilter/answerer.h"

namespace vqacurate::pipeline {

struct StageInput {
  std::string name;  // Key in StageManifest::inputs.
  std::filesystem::path path;
  bool required = true;  // Optional inputs hash as "absent" when missing.
};

struct StageDef {
  std::string name;
  std::function<std::vector<StageInput>(const PipelineConfig&)> inputs;
  // Settings that change the outputs; hashed into the "params" input.
  std::function<Json(const PipelineConfig&)> params;
  // Writes the stage files and fills outputs, primary_output and counts.
  std::function<void(const PipelineConfig&, StageManifest&)> run;
};

// The nine pipeline stages in dependency order.
const std::vector<StageDef>& StageDefs();
std::vector<std::string> StageNames();
// UsageError for an unknown stage.
const StageDef& FindStage(const std::string& name);

// Stand-in answerability labeler for runs without human labels: 0 when the
// question asks for study-level facts only the caption text can supply
// (patient counts, percentages, study or caption references), else 1.
int SyntheticAnswerabilityLabel(const qagen::QAPair& pair);
// Labels a seeded sample of up to n pairs, sorted by pair id.
std::vector<answerability::LabeledPair> SyntheticLabels(const std::vector<qagen::QAPair>& pairs,
                                                        size_t n, std::uint64_t seed);

// Reference predictions for runs without a model: the text of option A.
std::vector<eval::Prediction> BaselinePredictions(const std::vector<qagen::QAPair>& gold);

std::unique_ptr<qagen::GenerationClient> MakeGenerationClient(const PipelineConfig& config);
// `part` is 'a' or 'b'. `pairs` backs the oracle answerer.
std::unique_ptr<textfilter::Answerer> MakeAnswerer(const PipelineConfig& config, char part,
                                                   const std::vector<qagen::QAPair>& pairs);

}  // namespace vqacurate::pipeline

#endif  // VQACURATE_PIPELINE_STAGES_H_

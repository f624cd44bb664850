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

#include "vqacurate/pipeline/pipeline.h"

#include <chrono>

#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"
#include "vqacurate/pipeline/stages.h"

namespace vqacurate::pipeline {

Pipeline::Pipeline(PipelineConfig config, Hooks hooks)
    : config_(std::move(config)), hooks_(std::move(hooks)) {}

void Pipeline::CheckUpstream(const std::string& stage, const std::vector<std::string>& names,
                             const std::map<std::string, std::string>& hashes) const {
  for (const auto& upstream : StageNames()) {
    if (upstream == stage) break;
    const auto manifest = ReadManifest(config_.workdir, upstream);
    if (!manifest) continue;
    for (const auto& name : names) {
      auto recorded = manifest->outputs.find(name);
      if (recorded == manifest->outputs.end() || recorded->second == hashes.at(name)) continue;
      const std::string message = name + " differs from the version stage " + upstream +
                                  " recorded";
      if (config_.strict) throw DataError("hash mismatch: " + message);
      spdlog::warn("{}", message);
    }
  }
}

StageManifest Pipeline::RunStage(const std::string& name) {
  const StageDef& def = FindStage(name);
  StageManifest manifest;
  manifest.stage = name;
  std::vector<std::string> file_inputs;
  for (const auto& input : def.inputs(config_)) {
    if (!std::filesystem::exists(input.path)) {
      if (input.required) {
        throw PreconditionError("stage " + name + " needs " + input.path.string() +
                                ", which does not exist");
      }
      manifest.inputs[input.name] = "absent";
      continue;
    }
    manifest.inputs[input.name] = Sha256FileHex(input.path);
    file_inputs.push_back(input.name);
  }
  manifest.inputs["params"] = Sha256Hex(CanonicalDump(def.params(config_)));
  CheckUpstream(name, file_inputs, manifest.inputs);

  if (auto prior = ReadManifest(config_.workdir, name); prior && prior->SameRun(manifest)) {
    const auto stale = StaleOutputs(config_.workdir, *prior);
    if (stale.empty()) {
      spdlog::info("stage {}: inputs unchanged, reusing previous outputs", name);
      prior->skipped = true;
      return *prior;
    }
    std::string list;
    for (const auto& file : stale) list += (list.empty() ? "" : ", ") + file;
    if (config_.strict) {
      throw DataError("hash mismatch: outputs of stage " + name + " changed: " + list);
    }
    spdlog::warn("stage {}: outputs changed since the last run ({}); rerunning", name, list);
  }

  std::filesystem::create_directories(config_.workdir);
  std::filesystem::remove(ManifestPath(config_.workdir, name));
  if (hooks_.before_stage) hooks_.before_stage(name);
  spdlog::info("stage {}: running", name);
  const auto start = std::chrono::steady_clock::now();
  def.run(config_, manifest);
  manifest.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest.output_hash = manifest.outputs.at(manifest.primary_output);
  WriteManifest(config_.workdir, manifest);
  return manifest;
}

std::vector<StageManifest> Pipeline::RunAll() {
  std::vector<StageManifest> manifests;
  for (const auto& name : StageNames()) {
    try {
      manifests.push_back(RunStage(name));
    } catch (const std::exception& e) {
      spdlog::error("stage {} failed: {}", name, e.what());
      throw;
    }
  }
  return manifests;
}

}  // namespace vqacurate::pipeline

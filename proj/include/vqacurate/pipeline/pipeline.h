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

#ifndef VQACURATE_PIPELINE_PIPELINE_H_
#define VQACURATE_PIPELINE_PIPELINE_H_

#include <functional>
#include <string>
#include <vector>

#include "vqacurate/pipeline/config.h"
#include "vqacurate/pipeline/manifest.h"

namespace vqacurate::pipeline {

class Pipeline {
 public:
  struct Hooks {
    // Called right before a stage executes (not when it is skipped).
    std::function<void(const std::string& stage)> before_stage;
  };

  explicit Pipeline(PipelineConfig config, Hooks hooks = {});

  // Runs one stage, or reuses its manifest when the input hashes match the
  // previous run and its outputs are untouched. UsageError for an unknown
  // stage, PreconditionError for missing inputs. In strict mode an input that
  // differs from what its upstream stage recorded, or an edited output,
  // raises DataError; otherwise both are warnings and the stage reruns.
  StageManifest RunStage(const std::string& name);

  // All stages in order; the first error propagates and earlier manifests
  // stay on disk.
  std::vector<StageManifest> RunAll();

  const PipelineConfig& config() const { return config_; }

 private:
  void CheckUpstream(const std::string& stage, const std::vector<std::string>& names,
                     const std::map<std::string, std::string>& hashes) const;

  PipelineConfig config_;
  Hooks hooks_;
};

}  // namespace vqacurate::pipeline

#endif  // VQACURATE_PIPELINE_PIPELINE_H_

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

#ifndef VQACURATE_PIPELINE_MANIFEST_H_
#define VQACURATE_PIPELINE_MANIFEST_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "vqacurate/common/jsonl.h"

namespace vqacurate::pipeline {

inline constexpr char kToolVersion[] = "vqacurate 0.1.0";

// Record of one stage run. Everything here is a function of the inputs, so a
// rerun with the same inputs writes the same bytes. Wall time is kept out of
// the manifest file and written to a telemetry file next to it.
struct StageManifest {
  std::string stage;
  std::map<std::string, std::string> inputs;   // Name -> SHA-256 hex.
  std::map<std::string, std::string> outputs;  // File name -> SHA-256 hex.
  std::string output_hash;                     // Hash of the primary output file.
  std::string primary_output;
  std::map<std::string, size_t> counts_in;
  std::map<std::string, size_t> counts_out;
  std::string tool_version = kToolVersion;

  double wall_time_seconds = 0.0;  // Telemetry only.
  bool skipped = false;            // Set when reused; not serialized.

  bool SameRun(const StageManifest& other) const {
    return stage == other.stage && inputs == other.inputs && tool_version == other.tool_version;
  }
};

Json ToJson(const StageManifest& manifest);
StageManifest ManifestFromJson(const Json& json);

std::filesystem::path ManifestPath(const std::filesystem::path& workdir, const std::string& stage);
std::filesystem::path TelemetryPath(const std::filesystem::path& workdir,
                                    const std::string& stage);

std::optional<StageManifest> ReadManifest(const std::filesystem::path& workdir,
                                          const std::string& stage);
void WriteManifest(const std::filesystem::path& workdir, const StageManifest& manifest);

// Output files whose current hash differs from the manifest (or that are
// missing), relative to `workdir`.
std::vector<std::string> StaleOutputs(const std::filesystem::path& workdir,
                                      const StageManifest& manifest);

}  // namespace vqacurate::pipeline

#endif  // VQACURATE_PIPELINE_MANIFEST_H_

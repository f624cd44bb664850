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

#include "vqacurate/pipeline/manifest.h"

#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"

namespace vqacurate::pipeline {

Json ToJson(const StageManifest& m) {
  return Json{{"stage", m.stage},
              {"inputs", m.inputs},
              {"outputs", m.outputs},
              {"primary_output", m.primary_output},
              {"output_hash", m.output_hash},
              {"counts_in", m.counts_in},
              {"counts_out", m.counts_out},
              {"tool_version", m.tool_version}};
}

StageManifest ManifestFromJson(const Json& json) {
  try {
    StageManifest m;
    m.stage = json.at("stage").get<std::string>();
    m.inputs = json.at("inputs").get<std::map<std::string, std::string>>();
    m.outputs = json.at("outputs").get<std::map<std::string, std::string>>();
    m.primary_output = json.at("primary_output").get<std::string>();
    m.output_hash = json.at("output_hash").get<std::string>();
    m.counts_in = json.at("counts_in").get<std::map<std::string, size_t>>();
    m.counts_out = json.at("counts_out").get<std::map<std::string, size_t>>();
    m.tool_version = json.at("tool_version").get<std::string>();
    return m;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed stage manifest: ") + e.what());
  }
}

std::filesystem::path ManifestPath(const std::filesystem::path& workdir,
                                   const std::string& stage) {
  return workdir / "manifests" / (stage + ".manifest.json");
}

std::filesystem::path TelemetryPath(const std::filesystem::path& workdir,
                                    const std::string& stage) {
  return workdir / "telemetry" / (stage + ".json");
}

std::optional<StageManifest> ReadManifest(const std::filesystem::path& workdir,
                                          const std::string& stage) {
  const auto path = ManifestPath(workdir, stage);
  if (!std::filesystem::exists(path)) return std::nullopt;
  return ManifestFromJson(ReadJsonFile(path));
}

void WriteManifest(const std::filesystem::path& workdir, const StageManifest& manifest) {
  WriteJsonFile(ManifestPath(workdir, manifest.stage), ToJson(manifest));
  WriteJsonFile(TelemetryPath(workdir, manifest.stage),
                Json{{"stage", manifest.stage},
                     {"wall_time_seconds", manifest.wall_time_seconds},
                     {"counts_in", manifest.counts_in},
                     {"counts_out", manifest.counts_out}});
}

std::vector<std::string> StaleOutputs(const std::filesystem::path& workdir,
                                      const StageManifest& manifest) {
  std::vector<std::string> stale;
  for (const auto& [name, hash] : manifest.outputs) {
    const auto path = workdir / name;
    if (!std::filesystem::exists(path) || Sha256FileHex(path) != hash) stale.push_back(name);
  }
  return stale;
}

}  // namespace vqacurate::pipeline

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

#ifndef VQACURATE_PIPELINE_CONFIG_H_
#define VQACURATE_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "vqacurate/answerability/classifier.h"
#include "vqacurate/common/jsonl.h"
#include "vqacurate/corpus/corpus.h"
#include "vqacurate/eval/eval.h"
#include "vqacurate/qagen/client.h"
#include "vqacurate/splitter/splitter.h"

namespace vqacurate::pipeline {

struct GenerationConfig {
  std::string backend = "mock";  // "mock" or "http".
  std::optional<std::uint64_t> mock_seed;  // Defaults to run_seed.
  qagen::HttpClientConfig http;
  qagen::GenerationParams params;
  int max_retries = 3;
  size_t concurrency = 8;
};

struct TextFilterConfig {
  // "uniform", "oracle", "constant:<letter>", "abstain" or "http".
  std::string answerer = "uniform";
  std::string url_a;  // For "http"; part b falls back to url_a when empty.
  std::string url_b;
  int timeout_seconds = 30;
  int max_retries = 2;
  size_t concurrency = 8;
};

struct ClassifierConfig {
  std::filesystem::path labels;  // labels.jsonl; empty means synthetic labels.
  bool synthetic_labels = true;  // Used only when `labels` is empty.
  size_t n_labels = 2192;        // Synthetic label budget.
  answerability::Hyper hyper;
  bool include_options = true;
  double threshold = 0.5;
};

struct SplitConfig {
  splitter::Budgets budgets;
  std::filesystem::path verdict_log;  // Review verdicts; may not exist yet.
};

struct EvalConfig {
  eval::Task task = eval::Task::kChoice;
  std::filesystem::path predictions;  // Empty: score the built-in baseline.
  eval::BootstrapSettings bootstrap;
  std::optional<std::uint64_t> seed;  // Defaults to run_seed.
};

struct PipelineConfig {
  std::uint64_t run_seed = 0;
  bool strict = false;
  std::filesystem::path workdir;
  std::filesystem::path source;
  corpus::SourceFormat source_format = corpus::SourceFormat::kJsonl;
  GenerationConfig generation;
  TextFilterConfig textfilter;
  ClassifierConfig classifier;
  SplitConfig split;
  EvalConfig eval;

  std::filesystem::path Stage(const std::string& file) const { return workdir / file; }
};

// Parses TOML. Relative paths resolve against `base_dir`. UsageError for
// missing run_seed, workdir or source, unknown keys in known tables and bad
// values.
PipelineConfig ParseConfig(const std::string& toml_text, const std::filesystem::path& base_dir);
PipelineConfig LoadConfig(const std::filesystem::path& path);

}  // namespace vqacurate::pipeline

#endif  // VQACURATE_PIPELINE_CONFIG_H_

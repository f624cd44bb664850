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

#include "vqacurate/pipeline/config.h"

#include <set>
#include <sstream>

#include "toml.hpp"
#include "vqacurate/common/error.h"

namespace vqacurate::pipeline {
namespace {

void CheckKeys(const toml::table& table, const std::string& name,
               const std::set<std::string>& allowed) {
  for (const auto& [key, value] : table) {
    if (!allowed.contains(std::string(key.str()))) {
      throw UsageError("unknown config key '" + (name.empty() ? "" : name + ".") +
                       std::string(key.str()) + "'");
    }
  }
}

const toml::table* Table(const toml::table& root, const char* name) {
  const toml::node* node = root.get(name);
  if (node == nullptr) return nullptr;
  if (!node->is_table()) throw UsageError(std::string("config key '") + name + "' must be a table");
  return node->as_table();
}

template <typename T>
std::optional<T> Get(const toml::table& table, const std::string& name, const char* key) {
  const toml::node* node = table.get(key);
  if (node == nullptr) return std::nullopt;
  auto value = node->value<T>();
  if (!value) throw UsageError("config key '" + name + "." + key + "' has the wrong type");
  return value;
}

std::uint64_t NonNegative(std::int64_t value, const std::string& key) {
  if (value < 0) throw UsageError("config key '" + key + "' must be nonnegative");
  return static_cast<std::uint64_t>(value);
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& path) {
  std::filesystem::path p(path);
  return p.is_absolute() ? p : base / p;
}

}  // namespace

PipelineConfig ParseConfig(const std::string& toml_text, const std::filesystem::path& base_dir) {
  toml::table root;
  try {
    root = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream where;
    where << e.source().begin;
    throw UsageError("invalid config: " + std::string(e.description()) + " at " + where.str());
  }
  CheckKeys(root, "", {"run_seed", "strict", "paths", "generation", "textfilter", "classifier",
                       "split", "eval"});

  PipelineConfig c;
  const toml::node* seed = root.get("run_seed");
  if (seed == nullptr || !seed->is_integer()) throw UsageError("config needs an integer run_seed");
  c.run_seed = NonNegative(*seed->value<std::int64_t>(), "run_seed");
  if (auto v = Get<bool>(root, "", "strict")) c.strict = *v;

  const toml::table* paths = Table(root, "paths");
  if (paths == nullptr) throw UsageError("config needs a [paths] table");
  CheckKeys(*paths, "paths", {"workdir", "source", "source_format"});
  auto workdir = Get<std::string>(*paths, "paths", "workdir");
  auto source = Get<std::string>(*paths, "paths", "source");
  if (!workdir || !source) throw UsageError("config needs paths.workdir and paths.source");
  c.workdir = Resolve(base_dir, *workdir);
  c.source = Resolve(base_dir, *source);
  if (auto v = Get<std::string>(*paths, "paths", "source_format")) {
    try {
      c.source_format = corpus::ParseSourceFormat(*v);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  if (const toml::table* t = Table(root, "generation")) {
    const std::string n = "generation";
    CheckKeys(*t, n, {"backend", "mock_seed", "url", "api_key_env", "timeout_seconds", "model",
                      "temperature", "max_tokens", "max_retries", "concurrency"});
    auto& g = c.generation;
    if (auto v = Get<std::string>(*t, n, "backend")) g.backend = *v;
    if (g.backend != "mock" && g.backend != "http") {
      throw UsageError("generation.backend must be mock or http");
    }
    if (auto v = Get<std::int64_t>(*t, n, "mock_seed")) g.mock_seed = NonNegative(*v, n + ".mock_seed");
    if (auto v = Get<std::string>(*t, n, "url")) g.http.url = *v;
    if (auto v = Get<std::string>(*t, n, "api_key_env")) g.http.api_key_env = *v;
    if (auto v = Get<std::int64_t>(*t, n, "timeout_seconds")) g.http.timeout_seconds = static_cast<int>(*v);
    if (auto v = Get<std::string>(*t, n, "model")) g.params.model = *v;
    if (auto v = Get<double>(*t, n, "temperature")) g.params.temperature = *v;
    if (auto v = Get<std::int64_t>(*t, n, "max_tokens")) g.params.max_tokens = static_cast<int>(*v);
    if (auto v = Get<std::int64_t>(*t, n, "max_retries")) g.max_retries = static_cast<int>(NonNegative(*v, n + ".max_retries"));
    if (auto v = Get<std::int64_t>(*t, n, "concurrency")) g.concurrency = NonNegative(*v, n + ".concurrency");
  }

  if (const toml::table* t = Table(root, "textfilter")) {
    const std::string n = "textfilter";
    CheckKeys(*t, n, {"answerer", "url_a", "url_b", "timeout_seconds", "max_retries",
                      "concurrency"});
    auto& f = c.textfilter;
    if (auto v = Get<std::string>(*t, n, "answerer")) f.answerer = *v;
    if (auto v = Get<std::string>(*t, n, "url_a")) f.url_a = *v;
    if (auto v = Get<std::string>(*t, n, "url_b")) f.url_b = *v;
    if (auto v = Get<std::int64_t>(*t, n, "timeout_seconds")) f.timeout_seconds = static_cast<int>(*v);
    if (auto v = Get<std::int64_t>(*t, n, "max_retries")) f.max_retries = static_cast<int>(NonNegative(*v, n + ".max_retries"));
    if (auto v = Get<std::int64_t>(*t, n, "concurrency")) f.concurrency = NonNegative(*v, n + ".concurrency");
  }

  if (const toml::table* t = Table(root, "classifier")) {
    const std::string n = "classifier";
    CheckKeys(*t, n, {"labels", "synthetic_labels", "n_labels", "learning_rate", "l2_lambda",
                      "epochs", "include_options", "threshold"});
    auto& k = c.classifier;
    if (auto v = Get<std::string>(*t, n, "labels")) k.labels = Resolve(base_dir, *v);
    if (auto v = Get<bool>(*t, n, "synthetic_labels")) k.synthetic_labels = *v;
    if (auto v = Get<std::int64_t>(*t, n, "n_labels")) k.n_labels = NonNegative(*v, n + ".n_labels");
    if (auto v = Get<double>(*t, n, "learning_rate")) k.hyper.learning_rate = *v;
    if (auto v = Get<double>(*t, n, "l2_lambda")) k.hyper.l2_lambda = *v;
    if (auto v = Get<std::int64_t>(*t, n, "epochs")) k.hyper.epochs = static_cast<int>(NonNegative(*v, n + ".epochs"));
    if (auto v = Get<bool>(*t, n, "include_options")) k.include_options = *v;
    if (auto v = Get<double>(*t, n, "threshold")) k.threshold = *v;
  }
  if (c.classifier.labels.empty() && !c.classifier.synthetic_labels) {
    throw UsageError("classifier.labels is required when synthetic_labels is false");
  }

  if (const toml::table* t = Table(root, "split")) {
    const std::string n = "split";
    CheckKeys(*t, n, {"test_pairs", "review_n", "verdict_log"});
    if (auto v = Get<std::int64_t>(*t, n, "test_pairs")) c.split.budgets.test_pairs = NonNegative(*v, n + ".test_pairs");
    if (auto v = Get<std::int64_t>(*t, n, "review_n")) c.split.budgets.review_n = NonNegative(*v, n + ".review_n");
    if (auto v = Get<std::string>(*t, n, "verdict_log")) c.split.verdict_log = Resolve(base_dir, *v);
  }
  if (c.split.verdict_log.empty()) c.split.verdict_log = c.workdir / "verdicts.review.jsonl";

  if (const toml::table* t = Table(root, "eval")) {
    const std::string n = "eval";
    CheckKeys(*t, n, {"task", "predictions", "bootstrap", "alpha", "seed"});
    auto& e = c.eval;
    if (auto v = Get<std::string>(*t, n, "task")) e.task = eval::ParseTask(*v);
    if (auto v = Get<std::string>(*t, n, "predictions")) e.predictions = Resolve(base_dir, *v);
    if (auto v = Get<std::int64_t>(*t, n, "bootstrap")) e.bootstrap.resamples = NonNegative(*v, n + ".bootstrap");
    if (auto v = Get<double>(*t, n, "alpha")) e.bootstrap.alpha = *v;
    if (auto v = Get<std::int64_t>(*t, n, "seed")) e.seed = NonNegative(*v, n + ".seed");
  }
  return c;
}

PipelineConfig LoadConfig(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw UsageError("config file " + path.string() + " does not exist");
  }
  return ParseConfig(ReadFile(path), std::filesystem::absolute(path).parent_path());
}

}  // namespace vqacurate::pipeline

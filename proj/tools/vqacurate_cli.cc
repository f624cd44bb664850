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

// Command-line driver for the dataset pipeline, the review service and the
// evaluation harness.

#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"
#include "vqacurate/eval/eval.h"
#include "vqacurate/pipeline/config.h"
#include "vqacurate/pipeline/pipeline.h"
#include "vqacurate/pipeline/stages.h"
#include "vqacurate/review/review_server.h"

namespace {

using vqacurate::Json;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  bool strict = false;
};

void AddCommon(CLI::App* app, CommonFlags& flags, bool config_required) {
  auto* opt = app->add_option("--config", flags.config, "Pipeline TOML file");
  if (config_required) opt->required();
  app->add_option("--seed", flags.seed, "Override run_seed");
  app->add_flag("--strict", flags.strict, "Fail on hash mismatches and unresolved reviews");
}

vqacurate::pipeline::PipelineConfig Load(const CommonFlags& flags) {
  auto config = vqacurate::pipeline::LoadConfig(flags.config);
  if (flags.seed) config.run_seed = *flags.seed;
  if (flags.strict) config.strict = true;
  return config;
}

void PrintManifest(const vqacurate::pipeline::StageManifest& m) {
  Json out = ToJson(m);
  out["skipped"] = m.skipped;
  std::cout << out.dump() << '\n';
}

int Fail(const std::string& code, const std::string& message, int exit_code) {
  std::cerr << Json{{"code", code}, {"message", message}}.dump() << '\n';
  return exit_code;
}

vqacurate::review::ReviewServer* g_server = nullptr;

void HandleSignal(int) {
  if (g_server != nullptr) g_server->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Medical VQA dataset construction and evaluation"};
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off");

  CommonFlags flags;
  std::vector<std::pair<CLI::App*, std::string>> stage_commands;
  for (const auto& name : vqacurate::pipeline::StageNames()) {
    if (name == "eval") continue;
    auto* sub = app.add_subcommand(name, "Run the " + name + " stage");
    AddCommon(sub, flags, true);
    stage_commands.emplace_back(sub, name);
  }

  auto* run_all = app.add_subcommand("run-all", "Run every stage in order");
  AddCommon(run_all, flags, true);

  std::string export_pairs, export_log, export_out;
  auto* label_export =
      app.add_subcommand("label-export", "Write answerability labels from a review log");
  AddCommon(label_export, flags, true);
  label_export->add_option("--pairs", export_pairs, "Reviewed pairs (default: review candidates)");
  label_export->add_option("--log", export_log, "Verdict log (default: split.verdict_log)");
  label_export->add_option("--out", export_out, "Output (default: classifier.labels or workdir)");

  std::string serve_pairs, serve_log, media_dir, static_dir, host = "127.0.0.1";
  int port = 8080;
  int lease_minutes = 10;
  auto* serve = app.add_subcommand("review-serve", "Serve the manual review API");
  AddCommon(serve, flags, true);
  serve->add_option("--pairs", serve_pairs, "Pairs to review (default: review candidates)");
  serve->add_option("--log", serve_log, "Verdict log (default: split.verdict_log)");
  serve->add_option("--media", media_dir, "Directory holding the images");
  serve->add_option("--static", static_dir, "Built UI bundle");
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--lease-minutes", lease_minutes)->check(CLI::PositiveNumber);

  std::string task, gold, pred, eval_out = "eval_report.json";
  std::optional<std::uint64_t> eval_seed;
  std::optional<size_t> resamples;
  auto* eval_cmd = app.add_subcommand("eval", "Score predictions");
  AddCommon(eval_cmd, flags, false);
  eval_cmd->add_option("--task", task, "choice or blanking");
  eval_cmd->add_option("--gold", gold, "Gold split file; standalone mode when given");
  eval_cmd->add_option("--pred", pred, "Predictions JSONL {pair_id, text}");
  eval_cmd->add_option("--bootstrap", resamples, "Bootstrap resamples");
  eval_cmd->add_option("--out", eval_out, "Report path in standalone mode");
  // --seed on eval sets the bootstrap seed.
  eval_cmd->get_option("--seed")->description("Bootstrap seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return Fail("usage", e.what(), 2);
  }
  spdlog::set_default_logger(spdlog::stderr_color_mt("vqacurate"));
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    for (const auto& [sub, name] : stage_commands) {
      if (sub->parsed()) {
        vqacurate::pipeline::Pipeline pipeline(Load(flags));
        PrintManifest(pipeline.RunStage(name));
        return 0;
      }
    }
    if (run_all->parsed()) {
      vqacurate::pipeline::Pipeline pipeline(Load(flags));
      for (const auto& m : pipeline.RunAll()) PrintManifest(m);
      return 0;
    }
    if (label_export->parsed() || serve->parsed()) {
      const auto config = Load(flags);
      const std::string pairs_path =
          !(label_export->parsed() ? export_pairs : serve_pairs).empty()
              ? (label_export->parsed() ? export_pairs : serve_pairs)
              : config.Stage("review_candidates.jsonl").string();
      const std::string log_path = !(label_export->parsed() ? export_log : serve_log).empty()
                                       ? (label_export->parsed() ? export_log : serve_log)
                                       : config.split.verdict_log.string();
      vqacurate::review::ReviewStore::Options options;
      options.lease_timeout = std::chrono::minutes(lease_minutes);
      vqacurate::review::ReviewStore store(vqacurate::qagen::ReadPairsFile(pairs_path), log_path,
                                           options);
      if (label_export->parsed()) {
        std::string out = export_out;
        if (out.empty()) {
          out = config.classifier.labels.empty() ? config.Stage("labels.jsonl").string()
                                                 : config.classifier.labels.string();
        }
        std::vector<Json> rows;
        for (const auto& label : store.ExportLabels()) rows.push_back(ToJson(label));
        vqacurate::WriteJsonlFile(out, rows);
        std::cout << Json{{"labels", rows.size()}, {"path", out}}.dump() << '\n';
        return 0;
      }
      vqacurate::review::ServerOptions server_options;
      server_options.host = host;
      server_options.port = port;
      server_options.media_dir = media_dir;
      server_options.static_dir = static_dir;
      vqacurate::review::ReviewServer server(store, server_options);
      g_server = &server;
      std::signal(SIGINT, HandleSignal);
      std::signal(SIGTERM, HandleSignal);
      server.Serve();
      g_server = nullptr;
      return 0;
    }
    if (eval_cmd->parsed()) {
      if (!gold.empty()) {
        if (task.empty()) throw vqacurate::UsageError("--task is required with --gold");
        vqacurate::eval::BootstrapSettings bootstrap;
        bootstrap.seed = flags.seed.value_or(0);
        if (resamples) bootstrap.resamples = *resamples;
        const auto predictions = pred.empty() ? std::vector<vqacurate::eval::Prediction>{}
                                              : vqacurate::eval::ReadPredictions(pred);
        const auto report = vqacurate::eval::Evaluate(
            predictions, vqacurate::qagen::ReadPairsFile(gold),
            vqacurate::eval::ParseTask(task), bootstrap);
        Json json = ToJson(report);
        json["gold_split"] = gold;
        json["predictions"] = pred;
        vqacurate::WriteJsonFile(eval_out, json);
        Json summary = json;
        summary.erase("per_sample");
        std::cout << summary.dump() << '\n';
        return 0;
      }
      if (flags.config.empty()) {
        throw vqacurate::UsageError("eval needs --gold or --config");
      }
      CommonFlags pipeline_flags = flags;
      pipeline_flags.seed.reset();
      auto config = Load(pipeline_flags);
      if (!task.empty()) config.eval.task = vqacurate::eval::ParseTask(task);
      if (!pred.empty()) config.eval.predictions = pred;
      if (flags.seed) config.eval.seed = *flags.seed;
      if (resamples) config.eval.bootstrap.resamples = *resamples;
      vqacurate::pipeline::Pipeline pipeline(config);
      PrintManifest(pipeline.RunStage("eval"));
      return 0;
    }
  } catch (const vqacurate::UsageError& e) {
    return Fail(e.code(), e.what(), 2);
  } catch (const vqacurate::Error& e) {
    return Fail(e.code(), e.what(), 1);
  } catch (const std::exception& e) {
    return Fail("internal", e.what(), 1);
  }
  return Fail("usage", "no subcommand given", 2);
}

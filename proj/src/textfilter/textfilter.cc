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

#include "vqacurate/textfilter/textfilter.h"

#include <algorithm>
#include <unordered_map>

#include "spdlog/spdlog.h"
#include "vqacurate/common/error.h"
#include "vqacurate/common/parallel.h"
#include "vqacurate/common/random.h"

namespace vqacurate::textfilter {

bool IsBijection(const Permutation& permutation) {
  std::array<bool, 4> hit{};
  for (int p : permutation) {
    if (p < 0 || p > 3 || hit[p]) return false;
    hit[p] = true;
  }
  return true;
}

AnswerTrial::AnswerTrial(int trial_index, Permutation permutation,
                         std::optional<char> predicted_letter, int gold_index,
                         bool transport_failure)
    : trial_index_(trial_index),
      permutation_(permutation),
      predicted_letter_(predicted_letter),
      transport_failure_(transport_failure) {
  if (!IsBijection(permutation_)) {
    throw PreconditionError("trial permutation is not a bijection on {0,1,2,3}");
  }
  if (gold_index < 0 || gold_index > 3) {
    throw PreconditionError("gold index outside 0..3");
  }
  const auto predicted =
      predicted_letter_ ? qagen::LetterIndex(*predicted_letter_) : std::nullopt;
  correct_ = predicted.has_value() && *predicted == permutation_[gold_index];
}

TextOnlyVerdict::TextOnlyVerdict(std::string pair_id, std::vector<AnswerTrial> trials,
                                 char part)
    : pair_id_(std::move(pair_id)), trials_(std::move(trials)), part_(part) {
  if (trials_.size() != kTrials) {
    throw PreconditionError("a verdict needs exactly 5 trials, got " +
                            std::to_string(trials_.size()));
  }
}

int TextOnlyVerdict::n_correct() const {
  return static_cast<int>(std::count_if(trials_.begin(), trials_.end(),
                                        [](const AnswerTrial& t) { return t.correct(); }));
}

Json ToJson(const TextOnlyVerdict& verdict) {
  Json trials = Json::array();
  for (const AnswerTrial& trial : verdict.trials()) {
    trials.push_back(
        {{"trial_index", trial.trial_index()},
         {"permutation", trial.permutation()},
         {"predicted_letter", trial.predicted_letter()
                                  ? Json(std::string(1, *trial.predicted_letter()))
                                  : Json(nullptr)},
         {"transport_failure", trial.transport_failure()},
         {"correct", trial.correct()}});
  }
  return Json{{"pair_id", verdict.pair_id()},
              {"part", std::string(1, verdict.part())},
              {"trials", trials},
              {"n_correct", verdict.n_correct()},
              {"dismissed", verdict.dismissed()}};
}

TextOnlyVerdict VerdictFromJson(const Json& json, int gold_index) {
  try {
    std::vector<AnswerTrial> trials;
    for (const Json& t : json.at("trials")) {
      std::optional<char> letter;
      if (!t.at("predicted_letter").is_null()) {
        letter = t.at("predicted_letter").get<std::string>().at(0);
      }
      trials.emplace_back(t.at("trial_index").get<int>(),
                          t.at("permutation").get<Permutation>(), letter, gold_index,
                          t.value("transport_failure", false));
      if (trials.back().correct() != t.at("correct").get<bool>()) {
        throw DataError("stored trial correctness disagrees with permutation");
      }
    }
    TextOnlyVerdict verdict(json.at("pair_id").get<std::string>(), std::move(trials),
                            json.value("part", "a").at(0));
    if (verdict.n_correct() != json.at("n_correct").get<int>() ||
        verdict.dismissed() != json.at("dismissed").get<bool>()) {
      throw DataError("stored verdict totals disagree with its trials");
    }
    return verdict;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed verdict: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw DataError(std::string("malformed verdict: ") + e.what());
  }
}

Json ToJson(const FilterPartition& partition) {
  return Json{{"part_a", partition.part_a},
              {"part_b", partition.part_b},
              {"seed", partition.seed}};
}

FilterPartition PartitionForFilter(const std::vector<qagen::QAPair>& pairs,
                                   std::uint64_t seed) {
  if (pairs.empty()) throw PreconditionError("cannot partition an empty pair set");
  std::vector<std::string> ids;
  ids.reserve(pairs.size());
  for (const auto& pair : pairs) ids.push_back(pair.pair_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Rng rng(DeriveSeed(seed, {"filter-partition"}));
  rng.Shuffle(ids);

  FilterPartition partition;
  partition.seed = seed;
  const size_t half = (ids.size() + 1) / 2;
  partition.part_a.assign(ids.begin(), ids.begin() + static_cast<long>(half));
  partition.part_b.assign(ids.begin() + static_cast<long>(half), ids.end());
  std::sort(partition.part_a.begin(), partition.part_a.end());
  std::sort(partition.part_b.begin(), partition.part_b.end());
  return partition;
}

std::uint64_t TrialSeed(std::uint64_t run_seed, std::string_view pair_id,
                        int trial_index) {
  return DeriveSeed(run_seed, {"shuffle", pair_id, std::to_string(trial_index)});
}

ShuffledOptions ShuffleOptions(const qagen::QAPair& pair, std::uint64_t trial_seed) {
  std::vector<int> order = {0, 1, 2, 3};  // order[shuffled] = original.
  Rng rng(trial_seed);
  rng.Shuffle(order);
  ShuffledOptions out;
  for (int k = 0; k < 4; ++k) {
    out.options[k] = pair.options[order[k]];
    out.permutation[order[k]] = k;
  }
  return out;
}

TextOnlyVerdict RunTrials(Answerer& answerer, const qagen::QAPair& pair,
                          std::uint64_t run_seed, char part) {
  std::vector<AnswerTrial> trials;
  trials.reserve(kTrials);
  for (int t = 0; t < kTrials; ++t) {
    const ShuffledOptions shuffled =
        ShuffleOptions(pair, TrialSeed(run_seed, pair.pair_id, t));
    AnswerRequest request{pair.pair_id, t, pair.question, &shuffled.options};
    AnswerResult result;
    try {
      result = answerer.Answer(request);
    } catch (const std::exception& e) {
      result = {std::nullopt, true, e.what()};
    }
    std::optional<char> letter = result.transport_failure ? std::nullopt : result.letter;
    if (letter && !qagen::LetterIndex(*letter)) letter.reset();
    trials.emplace_back(t, shuffled.permutation, letter, pair.answer_index(),
                        result.transport_failure);
  }
  return TextOnlyVerdict(pair.pair_id, std::move(trials), part);
}

std::vector<TextOnlyVerdict> RunFilter(const std::vector<qagen::QAPair>& pairs,
                                       const FilterPartition& partition,
                                       Answerer& answerer_a, Answerer& answerer_b,
                                       std::uint64_t run_seed, size_t concurrency) {
  std::vector<std::optional<TextOnlyVerdict>> slots(pairs.size());
  ParallelFor(pairs.size(), concurrency, [&](size_t i) {
    const bool in_a = std::binary_search(partition.part_a.begin(),
                                         partition.part_a.end(), pairs[i].pair_id);
    slots[i] = RunTrials(in_a ? answerer_a : answerer_b, pairs[i], run_seed,
                         in_a ? 'a' : 'b');
  });
  std::vector<TextOnlyVerdict> verdicts;
  verdicts.reserve(pairs.size());
  for (auto& slot : slots) verdicts.push_back(std::move(*slot));
  return verdicts;
}

std::vector<qagen::QAPair> ApplyFilter(const std::vector<qagen::QAPair>& pairs,
                                       const std::vector<TextOnlyVerdict>& verdicts) {
  std::unordered_map<std::string, const TextOnlyVerdict*> by_id;
  for (const auto& verdict : verdicts) by_id[verdict.pair_id()] = &verdict;
  std::vector<qagen::QAPair> kept;
  for (const auto& pair : pairs) {
    auto it = by_id.find(pair.pair_id);
    if (it == by_id.end()) {
      throw NotFoundError("no text-filter verdict for pair '" + pair.pair_id + "'");
    }
    if (it->second->dismissed()) continue;
    qagen::QAPair copy = pair;
    copy.stage = qagen::Stage::kKeptByTextFilter;
    kept.push_back(std::move(copy));
  }
  spdlog::info("text filter kept {} of {} pairs (full-scale reference: 848,433 of 1,497,808)",
               kept.size(), pairs.size());
  return kept;
}

}  // namespace vqacurate::textfilter

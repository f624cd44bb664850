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

#ifndef VQACURATE_TEXTFILTER_TEXTFILTER_H_
#define VQACURATE_TEXTFILTER_TEXTFILTER_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqacurate/common/jsonl.h"
#include "vqacurate/qagen/qa_pair.h"
#include "vqacurate/textfilter/answerer.h"

namespace vqacurate::textfilter {

inline constexpr int kTrials = 5;
inline constexpr int kDismissThreshold = 3;

// permutation[original position] = shuffled position.
using Permutation = std::array<int, 4>;

bool IsBijection(const Permutation& permutation);

class AnswerTrial {
 public:
  // `gold_index` is the original position of the correct option. Throws
  // PreconditionError when `permutation` is not a bijection.
  AnswerTrial(int trial_index, Permutation permutation,
              std::optional<char> predicted_letter, int gold_index,
              bool transport_failure = false);

  int trial_index() const { return trial_index_; }
  const Permutation& permutation() const { return permutation_; }
  std::optional<char> predicted_letter() const { return predicted_letter_; }
  bool transport_failure() const { return transport_failure_; }
  // Prediction equals the shuffled position of the gold option. Abstentions
  // are incorrect.
  bool correct() const { return correct_; }

 private:
  int trial_index_;
  Permutation permutation_;
  std::optional<char> predicted_letter_;
  bool transport_failure_;
  bool correct_;
};

class TextOnlyVerdict {
 public:
  // Requires exactly kTrials trials.
  TextOnlyVerdict(std::string pair_id, std::vector<AnswerTrial> trials,
                  char part = 'a');

  const std::string& pair_id() const { return pair_id_; }
  const std::vector<AnswerTrial>& trials() const { return trials_; }
  // Filter half the pair belonged to ('a' or 'b').
  char part() const { return part_; }
  int n_correct() const;
  bool dismissed() const { return n_correct() >= kDismissThreshold; }

 private:
  std::string pair_id_;
  std::vector<AnswerTrial> trials_;
  char part_;
};

Json ToJson(const TextOnlyVerdict& verdict);
// Recomputes correctness from the stored permutation and prediction; throws
// DataError when the stored "correct"/"n_correct"/"dismissed" disagree.
TextOnlyVerdict VerdictFromJson(const Json& json, int gold_index);

struct FilterPartition {
  std::vector<std::string> part_a;  // Sorted pair ids.
  std::vector<std::string> part_b;
  std::uint64_t seed = 0;
};

Json ToJson(const FilterPartition& partition);

// Sorts pair ids, shuffles them with the seed and gives the first
// ceil(n/2) to part a. Throws PreconditionError on empty input.
FilterPartition PartitionForFilter(const std::vector<qagen::QAPair>& pairs,
                                   std::uint64_t seed);

// Seed of the shuffle stream for one trial, derived from
// (run_seed, pair_id, trial_index).
std::uint64_t TrialSeed(std::uint64_t run_seed, std::string_view pair_id,
                        int trial_index);

struct ShuffledOptions {
  std::array<std::string, 4> options;  // options[k] shown with letter A+k.
  Permutation permutation;
};

// Fisher-Yates over positions [0,1,2,3] drawn from Rng(trial_seed); the
// option at original position i is shown at shuffled position permutation[i].
ShuffledOptions ShuffleOptions(const qagen::QAPair& pair, std::uint64_t trial_seed);

// Five shuffled trials of one pair, run sequentially. A transport failure is
// recorded as an abstention with the failure flag set.
TextOnlyVerdict RunTrials(Answerer& answerer, const qagen::QAPair& pair,
                          std::uint64_t run_seed, char part = 'a');

// Runs the filter over all pairs. Pairs in part a are answered by
// `answerer_a` (a model trained on part b) and vice versa. Verdicts come back
// in the order of `pairs`, independent of scheduling.
std::vector<TextOnlyVerdict> RunFilter(const std::vector<qagen::QAPair>& pairs,
                                       const FilterPartition& partition,
                                       Answerer& answerer_a, Answerer& answerer_b,
                                       std::uint64_t run_seed,
                                       size_t concurrency = 8);

// Keeps pairs whose verdict is not dismissed and advances their stage to
// kKeptByTextFilter. Throws NotFoundError naming the first pair without a
// verdict.
std::vector<qagen::QAPair> ApplyFilter(const std::vector<qagen::QAPair>& pairs,
                                       const std::vector<TextOnlyVerdict>& verdicts);

}  // namespace vqacurate::textfilter

#endif  // VQACURATE_TEXTFILTER_TEXTFILTER_H_

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

#ifndef VQACURATE_STATS_STATS_H_
#define VQACURATE_STATS_STATS_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vqacurate/common/jsonl.h"
#include "vqacurate/qagen/qa_pair.h"

namespace vqacurate::stats {

struct PrefixNode {
  std::string token;  // Empty at the root.
  size_t count = 0;
  size_t terminal = 0;  // Questions ending exactly at this node.
  std::vector<PrefixNode> children;  // Count descending, then token ascending.

  bool operator==(const PrefixNode&) const = default;
};

struct PrefixTree {
  PrefixNode root;
  size_t depth = 4;

  bool operator==(const PrefixTree&) const = default;
};

// Counts the first `depth` tokens (text::Tokenize) of every question.
// Questions with no tokens only increase root.terminal.
PrefixTree BuildPrefixTree(const std::vector<std::string>& questions, size_t depth = 4);

Json ToJson(const PrefixNode& node);
Json ToJson(const PrefixTree& tree);

// Word length -> percentage of items. Empty input gives an empty histogram.
using Histogram = std::map<size_t, double>;

struct LengthHistograms {
  Histogram question;
  Histogram answer;  // Over the gold option text.
};

LengthHistograms ComputeLengthHistograms(const std::vector<qagen::QAPair>& pairs);

// Fractions of answer_letter A-D. All zero for empty input.
std::array<double, 4> OptionBalance(const std::vector<qagen::QAPair>& pairs);

// |pairs| / |distinct record_ids|. PreconditionError when there are none.
double PairsPerImage(const std::vector<qagen::QAPair>& pairs);

struct DatasetReport {
  size_t pair_count = 0;
  size_t image_count = 0;
  LengthHistograms lengths;
  std::array<double, 4> option_balance{};
  double pairs_per_image = 0.0;
  PrefixTree top_first_words;
};

DatasetReport BuildReport(const std::vector<qagen::QAPair>& pairs);

// Includes the full-scale reference values next to the measured ones.
Json ToJson(const DatasetReport& report);

// "length,percent" rows, ascending by length.
std::string HistogramCsv(const Histogram& histogram);

}  // namespace vqacurate::stats

#endif  // VQACURATE_STATS_STATS_H_

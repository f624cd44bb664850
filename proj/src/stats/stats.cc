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

#include "vqacurate/stats/stats.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "vqacurate/common/error.h"
#include "vqacurate/common/text.h"

namespace vqacurate::stats {
namespace {

// Mutable trie used while counting; converted to sorted PrefixNodes after.
struct Trie {
  size_t count = 0;
  size_t terminal = 0;
  std::map<std::string, Trie> children;
};

PrefixNode Freeze(const std::string& token, const Trie& trie) {
  PrefixNode node;
  node.token = token;
  node.count = trie.count;
  node.terminal = trie.terminal;
  node.children.reserve(trie.children.size());
  for (const auto& [child_token, child] : trie.children) {
    node.children.push_back(Freeze(child_token, child));
  }
  std::stable_sort(node.children.begin(), node.children.end(),
                   [](const PrefixNode& a, const PrefixNode& b) { return a.count > b.count; });
  return node;
}

Histogram ToPercentages(const std::map<size_t, size_t>& counts, size_t total) {
  Histogram histogram;
  for (const auto& [length, count] : counts) {
    histogram[length] = 100.0 * static_cast<double>(count) / static_cast<double>(total);
  }
  return histogram;
}

Json HistogramJson(const Histogram& histogram) {
  Json out = Json::object();
  for (const auto& [length, percent] : histogram) out[std::to_string(length)] = percent;
  return out;
}

}  // namespace

PrefixTree BuildPrefixTree(const std::vector<std::string>& questions, size_t depth) {
  Trie root;
  for (const auto& question : questions) {
    const auto tokens = text::Tokenize(question);
    const size_t n = std::min(depth, tokens.size());
    Trie* node = &root;
    ++node->count;
    for (size_t i = 0; i < n; ++i) {
      node = &node->children[tokens[i]];
      ++node->count;
    }
    ++node->terminal;
  }
  return {Freeze("", root), depth};
}

Json ToJson(const PrefixNode& node) {
  Json children = Json::array();
  for (const auto& child : node.children) children.push_back(ToJson(child));
  return Json{{"token", node.token},
              {"count", node.count},
              {"terminal", node.terminal},
              {"children", std::move(children)}};
}

Json ToJson(const PrefixTree& tree) {
  return Json{{"depth", tree.depth}, {"root", ToJson(tree.root)}};
}

LengthHistograms ComputeLengthHistograms(const std::vector<qagen::QAPair>& pairs) {
  std::map<size_t, size_t> question_counts;
  std::map<size_t, size_t> answer_counts;
  for (const auto& pair : pairs) {
    ++question_counts[text::WhitespaceSplit(pair.question).size()];
    ++answer_counts[text::WhitespaceSplit(pair.answer_text()).size()];
  }
  return {ToPercentages(question_counts, pairs.size()),
          ToPercentages(answer_counts, pairs.size())};
}

std::array<double, 4> OptionBalance(const std::vector<qagen::QAPair>& pairs) {
  std::array<size_t, 4> counts{};
  for (const auto& pair : pairs) ++counts[pair.answer_index()];
  std::array<double, 4> fractions{};
  if (pairs.empty()) return fractions;
  for (size_t i = 0; i < 4; ++i) {
    fractions[i] = static_cast<double>(counts[i]) / static_cast<double>(pairs.size());
  }
  return fractions;
}

double PairsPerImage(const std::vector<qagen::QAPair>& pairs) {
  std::set<std::string> images;
  for (const auto& pair : pairs) images.insert(pair.record_id);
  if (images.empty()) throw PreconditionError("pairs per image is undefined for zero images");
  return static_cast<double>(pairs.size()) / static_cast<double>(images.size());
}

DatasetReport BuildReport(const std::vector<qagen::QAPair>& pairs) {
  DatasetReport report;
  report.pair_count = pairs.size();
  std::set<std::string> images;
  std::vector<std::string> questions;
  questions.reserve(pairs.size());
  for (const auto& pair : pairs) {
    images.insert(pair.record_id);
    questions.push_back(pair.question);
  }
  report.image_count = images.size();
  report.lengths = ComputeLengthHistograms(pairs);
  report.option_balance = OptionBalance(pairs);
  report.pairs_per_image = PairsPerImage(pairs);
  report.top_first_words = BuildPrefixTree(questions);
  return report;
}

Json ToJson(const DatasetReport& report) {
  Json balance = Json::object();
  for (size_t i = 0; i < 4; ++i) {
    balance[std::string(1, qagen::kLetters[i])] = report.option_balance[i];
  }
  return Json{
      {"pair_count", report.pair_count},
      {"image_count", report.image_count},
      {"question_length_histogram", HistogramJson(report.lengths.question)},
      {"answer_length_histogram", HistogramJson(report.lengths.answer)},
      {"option_balance", std::move(balance)},
      {"pairs_per_image", report.pairs_per_image},
      {"top_first_words", ToJson(report.top_first_words)},
      {"full_scale_reference",
       {{"option_balance", {{"A", 0.2407}, {"B", 0.3087}, {"C", 0.2909}, {"D", 0.1597}}},
        {"pairs_per_image", 3.93}}}};
}

std::string HistogramCsv(const Histogram& histogram) {
  std::ostringstream out;
  out << "length,percent\n";
  for (const auto& [length, percent] : histogram) out << length << ',' << percent << '\n';
  return out.str();
}

}  // namespace vqacurate::stats

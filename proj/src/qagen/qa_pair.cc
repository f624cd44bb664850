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

#include "vqacurate/qagen/qa_pair.h"

#include "vqacurate/common/error.h"
#include "vqacurate/common/hash.h"
#include "vqacurate/common/text.h"

namespace vqacurate::qagen {

namespace {

constexpr std::array<std::string_view, 8> kStageNames = {
    "generated",    "kept_by_text_filter", "kept_by_classifier",
    "train",        "test_initial",        "review_candidate",
    "test_clean",   "rejected"};

}  // namespace

std::string_view StageName(Stage stage) {
  return kStageNames[static_cast<size_t>(stage)];
}

Stage ParseStage(std::string_view name) {
  for (size_t i = 0; i < kStageNames.size(); ++i) {
    if (kStageNames[i] == name) return static_cast<Stage>(i);
  }
  throw DataError("unknown stage '" + std::string(name) + "'");
}

std::optional<int> LetterIndex(char letter) {
  if (letter >= 'A' && letter <= 'D') return letter - 'A';
  if (letter >= 'a' && letter <= 'd') return letter - 'a';
  return std::nullopt;
}

std::string ComputePairId(std::string_view record_id, std::string_view question,
                          const std::array<std::string, 4>& options) {
  const Json key = Json::array(
      {record_id, question, Json::array({options[0], options[1], options[2], options[3]})});
  const Sha256Digest digest = Sha256(CanonicalDump(key));
  return ToHex(std::span<const std::uint8_t>(digest.data(), 16));
}

std::string ValidatePair(const QAPair& pair) {
  if (pair.record_id.empty()) return "empty record_id";
  if (text::Trim(pair.question).empty()) return "empty question";
  if (pair.question_index < 1 || pair.question_index > 5) {
    return "question_index outside 1..5";
  }
  for (size_t i = 0; i < pair.options.size(); ++i) {
    if (text::Trim(pair.options[i]).empty()) {
      return std::string("empty option ") + kLetters[i];
    }
  }
  if (pair.answer_letter < 'A' || pair.answer_letter > 'D') {
    return "answer_letter not one of A-D";
  }
  return "";
}

Json ToJson(const QAPair& pair) {
  Json options = Json::array();
  for (size_t i = 0; i < pair.options.size(); ++i) {
    options.push_back({{"letter", std::string(1, kLetters[i])},
                       {"text", pair.options[i]}});
  }
  return Json{{"pair_id", pair.pair_id},
              {"record_id", pair.record_id},
              {"image_ref", pair.image_ref},
              {"question_index", pair.question_index},
              {"question", pair.question},
              {"options", options},
              {"answer_letter", std::string(1, pair.answer_letter)},
              {"stage", StageName(pair.stage)},
              {"flags", pair.flags}};
}

QAPair PairFromJson(const Json& json) {
  QAPair pair;
  try {
    pair.pair_id = json.at("pair_id").get<std::string>();
    pair.record_id = json.at("record_id").get<std::string>();
    pair.image_ref = json.value("image_ref", "");
    pair.question_index = json.at("question_index").get<int>();
    pair.question = json.at("question").get<std::string>();
    const Json& options = json.at("options");
    if (!options.is_array() || options.size() != 4) {
      throw DataError("pair '" + pair.pair_id + "': expected 4 options");
    }
    for (size_t i = 0; i < 4; ++i) {
      const std::string letter = options[i].at("letter").get<std::string>();
      if (letter.size() != 1 || letter[0] != kLetters[i]) {
        throw DataError("pair '" + pair.pair_id + "': options out of order");
      }
      pair.options[i] = options[i].at("text").get<std::string>();
    }
    const std::string answer = json.at("answer_letter").get<std::string>();
    if (answer.size() != 1) {
      throw DataError("pair '" + pair.pair_id + "': bad answer_letter");
    }
    pair.answer_letter = answer[0];
    pair.stage = ParseStage(json.value("stage", "generated"));
    if (json.contains("flags")) {
      pair.flags = json.at("flags").get<std::vector<std::string>>();
    }
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed pair: ") + e.what());
  }
  const std::string problem = ValidatePair(pair);
  if (!problem.empty()) {
    throw DataError("pair '" + pair.pair_id + "': " + problem);
  }
  return pair;
}

std::vector<QAPair> ReadPairsFile(const std::string& path) {
  std::vector<QAPair> pairs;
  for (const Json& row : ReadJsonlFile(path)) pairs.push_back(PairFromJson(row));
  return pairs;
}

void WritePairsFile(const std::string& path, const std::vector<QAPair>& pairs) {
  std::vector<Json> rows;
  rows.reserve(pairs.size());
  for (const QAPair& pair : pairs) rows.push_back(ToJson(pair));
  WriteJsonlFile(path, rows);
}

}  // namespace vqacurate::qagen

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

#include <algorithm>
#include <array>
#include <set>

#include "vqacurate/common/random.h"
#include "vqacurate/common/text.h"
#include "vqacurate/qagen/client.h"
#include "vqacurate/qagen/parser.h"
#include "vqacurate/qagen/prompt.h"

namespace vqacurate::qagen {

namespace {

// Question stems. "{}" is replaced by a caption term. Stems with a caption
// dependency ("how many patients", "what percentage") imitate questions a
// human would label as not answerable from the image.
constexpr std::array<std::string_view, 12> kStems = {
    "What is shown in the image of the {}?",
    "Which structure is highlighted near the {}?",
    "What imaging modality was used to show the {}?",
    "What abnormality is visible in the {}?",
    "Where is the lesion located relative to the {}?",
    "What does the arrow indicate in the {} image?",
    "Which finding is most consistent with the {}?",
    "What is the appearance of the {} in this scan?",
    "How many patients in the study had {} findings?",
    "What percentage of cases showed {} improvement?",
    "Which color marks the {} in the figure?",
    "What type of staining highlights the {}?",
};

constexpr std::array<std::string_view, 24> kDistractors = {
    "Pleural effusion",   "Normal anatomy",      "Left ventricle",
    "Renal cyst",         "Hepatic lesion",      "Bone fracture",
    "Pulmonary nodule",   "Axial CT",            "Sagittal MRI",
    "Ultrasound",         "Hematoxylin and eosin", "Lymph node",
    "Aortic aneurysm",    "Cerebral infarct",    "Spinal cord",
    "Thyroid nodule",     "Gallbladder",         "Pancreatic mass",
    "Brain stem",         "Calcification",       "Edema",
    "Necrosis",           "Fibrosis",            "Hemorrhage",
};

std::string Capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 32);
  return s;
}

std::string ReplaceSlot(std::string_view stem, std::string_view term) {
  std::string out(stem);
  const size_t slot = out.find("{}");
  out.replace(slot, 2, term);
  return out;
}

std::vector<QAPair> MakePairs(const std::string& caption, Rng& rng) {
  std::vector<std::string> terms;
  std::set<std::string> seen;
  for (const std::string& token : text::Tokenize(caption)) {
    if (token.size() >= 4 && seen.insert(token).second) terms.push_back(token);
  }
  if (terms.empty()) terms.push_back("region");

  std::vector<size_t> stems(kStems.size());
  for (size_t i = 0; i < stems.size(); ++i) stems[i] = i;
  rng.Shuffle(stems);

  std::vector<QAPair> pairs;
  for (int q = 0; q < 5; ++q) {
    const std::string& term = terms[rng.UniformIndex(terms.size())];
    QAPair pair;
    pair.question_index = q + 1;
    pair.question = ReplaceSlot(kStems[stems[q]], term);

    std::string correct = Capitalize(term);
    if (terms.size() > 1) {
      correct += " " + terms[rng.UniformIndex(terms.size())];
    }
    std::vector<std::string> distractors;
    while (distractors.size() < 3) {
      std::string candidate(kDistractors[rng.UniformIndex(kDistractors.size())]);
      if (text::CaseFold(candidate) == text::CaseFold(correct)) continue;
      if (std::find(distractors.begin(), distractors.end(), candidate) !=
          distractors.end()) {
        continue;
      }
      distractors.push_back(std::move(candidate));
    }
    const size_t gold = rng.UniformIndex(4);
    size_t next = 0;
    for (size_t i = 0; i < 4; ++i) {
      pair.options[i] = i == gold ? correct : distractors[next++];
    }
    pair.answer_letter = kLetters[gold];
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

// Labels in lowercase, fields on separate lines, answer as a sentence.
std::string RenderLoose(const std::vector<QAPair>& pairs) {
  std::string out = "Here are the questions:\n\n";
  for (const QAPair& p : pairs) {
    out += "i: " + std::to_string(p.question_index) + "\nQuestion: " + p.question +
           "\nChoice:\n  a: " + p.options[0] + "\n  b: " + p.options[1] +
           "\n  c: " + p.options[2] + "\n  d: " + p.options[3] +
           "\nAnswer: The correct option is " + std::string(1, p.answer_letter) +
           ".\n\n";
  }
  return out;
}

}  // namespace

std::string MockGenerationClient::backend_id() const {
  return "mock:" + std::to_string(seed_);
}

ClientResponse MockGenerationClient::Complete(std::string_view prompt,
                                              const GenerationParams& /*params*/) {
  const std::string caption = CaptionFromPrompt(prompt);
  if (caption.empty()) return ClientResponse::Permanent("unrecognized prompt");
  Rng rng(DeriveSeed(seed_, {"mock-generation", caption}));
  const double scenario = rng.UniformDouble();
  std::vector<QAPair> pairs = MakePairs(caption, rng);

  if (scenario < 0.70) return ClientResponse::Ok(RenderTemplate(pairs));
  if (scenario < 0.80) {
    // The model runs out of material and repeats its first question.
    pairs[3].question = pairs[0].question;
    pairs[4].question = text::CaseFold(pairs[0].question) + " ";
    return ClientResponse::Ok(RenderTemplate(pairs));
  }
  if (scenario < 0.87) {
    pairs.resize(3);
    return ClientResponse::Ok(
        RenderTemplate(pairs) +
        "I'm sorry, but the caption does not contain enough information to "
        "generate more questions.\n");
  }
  if (scenario < 0.90) {
    return ClientResponse::Ok(
        "I'm sorry, but I cannot generate five questions from this caption.");
  }
  if (scenario < 0.95) return ClientResponse::Ok(RenderLoose(pairs));
  // Output cut off in the middle of the last block.
  std::string textout = RenderTemplate(pairs);
  const size_t cut = textout.rfind(" D:");
  return ClientResponse::Ok(textout.substr(0, cut) + "\n");
}

}  // namespace vqacurate::qagen

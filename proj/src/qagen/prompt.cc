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

#include "vqacurate/qagen/prompt.h"

#include "vqacurate/common/error.h"
#include "vqacurate/common/text.h"

namespace vqacurate::qagen {

const std::string_view kGenerationInstruction =
    "Ask 5 questions about the content and generate four options for each "
    "question. The questions should be answerable with the information "
    "provided in the caption, and the four options should include one correct "
    "and three incorrect options, with the position of the correct option "
    "randomized. The output should use the following template: i:`the "
    "question index' question:`the generate question' choice: `A:option "
    "content B:option content C:option content D:option content' answer: The "
    "correct option(A\\B\\C\\D).";

const std::string_view kCaptionSeparator = "\n\nCaption: ";

std::string BuildPrompt(std::string_view caption) {
  if (text::Trim(caption).empty()) {
    throw PreconditionError("caption must be nonempty");
  }
  std::string prompt(kGenerationInstruction);
  prompt += kCaptionSeparator;
  prompt += caption;
  return prompt;
}

std::string CaptionFromPrompt(std::string_view prompt) {
  const size_t prefix = kGenerationInstruction.size() + kCaptionSeparator.size();
  if (prompt.size() < prefix || !prompt.starts_with(kGenerationInstruction) ||
      prompt.substr(kGenerationInstruction.size(), kCaptionSeparator.size()) !=
          kCaptionSeparator) {
    return "";
  }
  return std::string(prompt.substr(prefix));
}

}  // namespace vqacurate::qagen

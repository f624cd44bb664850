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

#ifndef VQACURATE_QAGEN_PROMPT_H_
#define VQACURATE_QAGEN_PROMPT_H_

#include <string>
#include <string_view>

namespace vqacurate::qagen {

// The generation instruction, sent verbatim ahead of every caption.
extern const std::string_view kGenerationInstruction;

// Separator between the instruction and the caption slot.
extern const std::string_view kCaptionSeparator;

// Instruction + separator + caption. Throws PreconditionError when the
// caption is empty after trimming.
std::string BuildPrompt(std::string_view caption);

// Inverse of BuildPrompt; returns an empty string when `prompt` was not
// produced by it.
std::string CaptionFromPrompt(std::string_view prompt);

}  // namespace vqacurate::qagen

#endif  // VQACURATE_QAGEN_PROMPT_H_

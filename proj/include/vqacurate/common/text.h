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

#ifndef VQACURATE_COMMON_TEXT_H_
#define VQACURATE_COMMON_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace vqacurate::text {

// Returns true when `bytes` is well-formed UTF-8 (no overlongs, surrogates or
// code points above U+10FFFF). On failure, `error_offset` receives the byte
// offset of the first bad sequence.
bool IsValidUtf8(std::string_view bytes, size_t* error_offset = nullptr);

// Invalid sequences decode to U+FFFD, one per offending byte.
std::u32string DecodeUtf8(std::string_view bytes);
std::string EncodeUtf8(std::u32string_view code_points);

// Simple lowercase mapping for ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic. Everything else passes through unchanged.
char32_t FoldCodePoint(char32_t c);
std::string CaseFold(std::string_view text);

bool IsSpace(char c);
std::string_view Trim(std::string_view text);
// Trims and replaces each internal whitespace run with one space.
std::string CollapseWhitespace(std::string_view text);

// Splits on ASCII whitespace runs; no other normalization.
std::vector<std::string> WhitespaceSplit(std::string_view text);

// Shared tokenizer for metrics, statistics and features: case-folded,
// whitespace-split, leading/trailing ASCII punctuation stripped from each
// token, empty tokens dropped.
std::vector<std::string> Tokenize(std::string_view text);

}  // namespace vqacurate::text

#endif  // VQACURATE_COMMON_TEXT_H_

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

#ifndef VQACURATE_COMMON_JSONL_H_
#define VQACURATE_COMMON_JSONL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"

namespace vqacurate {

using Json = nlohmann::json;

// Canonical single-line form: keys sorted, no whitespace, UTF-8 kept as-is,
// invalid UTF-8 replaced with U+FFFD.
std::string CanonicalDump(const Json& value);

// Serializes one canonical JSON object per line, each terminated by '\n'.
std::string ToJsonl(const std::vector<Json>& rows);

// Parses JSON Lines; blank lines are skipped. Throws DataError naming the
// 1-based line number on malformed input.
std::vector<Json> ParseJsonl(std::string_view text);

std::string ReadFile(const std::filesystem::path& path);

// Writes through a temporary sibling and renames into place, creating parent
// directories as needed.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view bytes);

std::vector<Json> ReadJsonlFile(const std::filesystem::path& path);
void WriteJsonlFile(const std::filesystem::path& path,
                    const std::vector<Json>& rows);

Json ReadJsonFile(const std::filesystem::path& path);
// Pretty-printed with 2-space indent and sorted keys, trailing newline.
void WriteJsonFile(const std::filesystem::path& path, const Json& value);

}  // namespace vqacurate

#endif  // VQACURATE_COMMON_JSONL_H_

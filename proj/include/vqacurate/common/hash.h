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

#ifndef VQACURATE_COMMON_HASH_H_
#define VQACURATE_COMMON_HASH_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace vqacurate {

using Sha256Digest = std::array<std::uint8_t, 32>;

Sha256Digest Sha256(std::string_view bytes);
std::string Sha256Hex(std::string_view bytes);

// Hex digest of a file's content. Throws IoError when unreadable.
std::string Sha256FileHex(const std::filesystem::path& path);

std::string ToHex(std::span<const std::uint8_t> bytes);

// Little-endian uint64 built from the first 8 digest bytes of `bytes`.
std::uint64_t HashToU64(std::string_view bytes);

// 64-bit FNV-1a. Used for feature hashing where a cheap, documented,
// language-independent hash is needed.
std::uint64_t Fnv1a64(std::string_view bytes);

std::string Base64Encode(std::span<const std::uint8_t> bytes);
// Throws DataError on malformed input.
std::string Base64Decode(std::string_view text);

}  // namespace vqacurate

#endif  // VQACURATE_COMMON_HASH_H_

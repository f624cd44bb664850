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

#ifndef VQACURATE_QAGEN_PARSER_H_
#define VQACURATE_QAGEN_PARSER_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vqacurate/common/jsonl.h"
#include "vqacurate/qagen/client.h"
#include "vqacurate/qagen/qa_pair.h"

namespace vqacurate::qagen {

enum class IssueKind {
  kNoBlocks,
  kMissingField,
  kMissingOption,
  kBadAnswerLetter,
  kDuplicateBlock,
  kRefusalText,
};

std::string_view IssueKindName(IssueKind kind);

struct ParseIssue {
  std::string record_id;
  size_t span_begin = 0;  // Byte offsets into response_text, [begin, end).
  size_t span_end = 0;
  IssueKind kind = IssueKind::kNoBlocks;
  std::string detail;

  bool operator==(const ParseIssue&) const = default;
};

Json ToJson(const ParseIssue& issue);

struct ParseResult {
  std::vector<QAPair> pairs;
  // Byte span of the block each pair came from, parallel to `pairs`.
  std::vector<std::pair<size_t, size_t>> spans;
  std::vector<ParseIssue> issues;
};

// Block grammar, one block per question:
//
//   i:<int> question:<text> choice: A:<text> B:<text> C:<text> D:<text>
//   answer:<letter-expression>
//
// Labels are case-insensitive; any whitespace, including newlines, may
// surround them. A block starts at an "i:<digits>" label (the digits may
// follow an opening quote, as in i:`1') at the start of the text or after
// whitespace or a quote, and runs to the next block start.
// Field texts are trimmed of whitespace and wrapping quotes/backticks. The
// answer is the first nonblank line after "answer:": either a bare letter or
// a phrase containing exactly one standalone capital A-D ("The correct option
// is B"). Only the first five blocks are read. Incomplete blocks produce
// issues and never partial pairs. Never throws.
ParseResult ParseGeneration(const RawGeneration& generation);

// Exact template text for well-formed pairs, one block per line.
std::string RenderTemplate(const std::vector<QAPair>& pairs);

struct DedupResult {
  std::vector<QAPair> kept;
  std::vector<QAPair> dropped;
};

// Drops pairs whose case-folded, whitespace-collapsed question repeats an
// earlier pair; the first occurrence is kept. All pairs must share one
// record_id (PreconditionError otherwise).
DedupResult DedupPairs(const std::vector<QAPair>& pairs);

// Parse followed by dedup; dropped repeats become kDuplicateBlock issues.
ParseResult ParseAndDedup(const RawGeneration& generation);

}  // namespace vqacurate::qagen

#endif  // VQACURATE_QAGEN_PARSER_H_

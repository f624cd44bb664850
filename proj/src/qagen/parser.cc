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

#include "vqacurate/qagen/parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <unordered_map>

#include "vqacurate/common/error.h"
#include "vqacurate/common/text.h"

namespace vqacurate::qagen {

namespace {

constexpr size_t kMaxBlocks = 5;

constexpr std::array<std::string_view, 11> kRefusalPhrases = {
    "i'm sorry",         "i am sorry",        "i apologize",
    "i cannot",          "i can't",           "i can not",
    "as an ai",          "unable to generate", "cannot generate",
    "not possible to generate", "i'm unable"};

bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }
char Lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool IsQuote(char c) { return c == '`' || c == '\'' || c == '"'; }

// Characters that may precede a label.
bool IsLabelBoundary(std::string_view text, size_t pos) {
  if (pos == 0) return true;
  const char prev = text[pos - 1];
  return text::IsSpace(prev) || IsQuote(prev) || prev == '(' || prev == '*';
}

bool MatchesWordAt(std::string_view text, size_t pos, std::string_view word) {
  if (pos + word.size() > text.size()) return false;
  for (size_t i = 0; i < word.size(); ++i) {
    if (Lower(text[pos + i]) != word[i]) return false;
  }
  return true;
}

// Skips spaces/tabs/newlines starting at `pos`.
size_t SkipSpace(std::string_view text, size_t pos) {
  while (pos < text.size() && text::IsSpace(text[pos])) ++pos;
  return pos;
}

struct Label {
  size_t begin = 0;  // Position of the label word.
  size_t end = 0;    // Just past the ':'.
};

// Finds `word` (lowercase) followed by optional whitespace and ':' at a label
// boundary, searching [from, to). Returns the first match.
std::optional<Label> FindLabel(std::string_view text, size_t from, size_t to,
                               std::initializer_list<std::string_view> words) {
  to = std::min(to, text.size());
  for (size_t pos = from; pos < to; ++pos) {
    if (!IsLabelBoundary(text, pos)) continue;
    for (std::string_view word : words) {
      if (!MatchesWordAt(text, pos, word)) continue;
      const size_t after = pos + word.size();
      if (after < text.size() && IsAlnum(text[after])) continue;
      const size_t colon = SkipSpace(text, after);
      if (colon < to && text[colon] == ':') return Label{pos, colon + 1};
    }
  }
  return std::nullopt;
}

std::string CleanField(std::string_view raw) {
  size_t begin = 0;
  size_t end = raw.size();
  auto strip = [](char c) { return text::IsSpace(c) || IsQuote(c); };
  while (begin < end && strip(raw[begin])) ++begin;
  while (end > begin && strip(raw[end - 1])) --end;
  return text::CollapseWhitespace(raw.substr(begin, end - begin));
}

bool ContainsRefusal(std::string_view raw) {
  const std::string folded = text::CaseFold(raw);
  // Normalize typographic apostrophes.
  std::string normalized;
  normalized.reserve(folded.size());
  for (size_t i = 0; i < folded.size(); ++i) {
    if (folded.compare(i, 3, "\xE2\x80\x99") == 0) {
      normalized.push_back('\'');
      i += 2;
    } else {
      normalized.push_back(folded[i]);
    }
  }
  return std::any_of(kRefusalPhrases.begin(), kRefusalPhrases.end(),
                     [&](std::string_view p) {
                       return normalized.find(p) != std::string::npos;
                     });
}

struct BlockStart {
  size_t begin = 0;
  size_t body = 0;  // Just past the index digits.
  long long index = 0;
};

std::vector<BlockStart> FindBlockStarts(std::string_view text) {
  std::vector<BlockStart> starts;
  for (size_t pos = 0; pos < text.size(); ++pos) {
    if (Lower(text[pos]) != 'i' || !IsLabelBoundary(text, pos)) continue;
    size_t p = pos + 1;
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p;
    if (p >= text.size() || text[p] != ':') continue;
    p = SkipSpace(text, p + 1);
    if (p < text.size() && IsQuote(text[p])) ++p;  // i:`1'
    const size_t digits = p;
    long long value = 0;
    while (p < text.size() && IsDigit(text[p]) && p - digits < 9) {
      value = value * 10 + (text[p] - '0');
      ++p;
    }
    if (p == digits) continue;
    starts.push_back({pos, p, value});
    pos = p - 1;
  }
  return starts;
}

// Letter named by an answer expression, or nullopt when none or several.
std::optional<char> ExtractAnswerLetter(std::string_view expression) {
  size_t begin = 0;
  size_t end = expression.size();
  auto strip = [](char c) {
    return text::IsSpace(c) || IsQuote(c) || c == '.' || c == '(' ||
           c == ')' || c == '*' || c == ':' || c == '[' || c == ']';
  };
  while (begin < end && strip(expression[begin])) ++begin;
  while (end > begin && strip(expression[end - 1])) --end;
  const std::string_view core = expression.substr(begin, end - begin);
  if (core.size() == 1 && LetterIndex(core[0])) {
    return static_cast<char>(std::toupper(static_cast<unsigned char>(core[0])));
  }
  std::set<char> letters;
  for (size_t i = 0; i < expression.size(); ++i) {
    const char c = expression[i];
    if (c < 'A' || c > 'D') continue;
    const bool left_ok = i == 0 || !IsAlnum(expression[i - 1]);
    const bool right_ok = i + 1 >= expression.size() || !IsAlnum(expression[i + 1]);
    if (left_ok && right_ok) letters.insert(c);
  }
  if (letters.size() == 1) return *letters.begin();
  return std::nullopt;
}

struct BlockOutcome {
  std::optional<QAPair> pair;
  std::vector<ParseIssue> issues;
};

BlockOutcome ParseBlock(std::string_view text, const BlockStart& start,
                        size_t block_end, const std::string& record_id) {
  BlockOutcome out;
  auto issue = [&](IssueKind kind, std::string detail, size_t b, size_t e) {
    out.issues.push_back({record_id, b, e, kind, std::move(detail)});
  };
  const size_t b = start.begin;
  const size_t e = block_end;

  if (start.index < 1 || start.index > 5) {
    issue(IssueKind::kMissingField,
          "question index " + std::to_string(start.index) + " outside 1..5", b, e);
    return out;
  }
  const auto question = FindLabel(text, start.body, e, {"question"});
  if (!question) {
    issue(IssueKind::kMissingField, "missing 'question:' label", b, e);
    return out;
  }
  const auto choice = FindLabel(text, question->end, e, {"choices", "choice"});
  if (!choice) {
    issue(IssueKind::kMissingField, "missing 'choice:' label", b, e);
    return out;
  }
  QAPair pair;
  pair.record_id = record_id;
  pair.question_index = static_cast<int>(start.index);
  pair.question = CleanField(text.substr(question->end, choice->begin - question->end));
  if (pair.question.empty()) {
    issue(IssueKind::kMissingField, "empty question text", b, e);
    return out;
  }

  const auto answer = FindLabel(text, choice->end, e, {"answer"});
  const size_t options_end = answer ? answer->begin : e;
  std::array<Label, 4> option_labels;
  size_t cursor = choice->end;
  for (size_t i = 0; i < 4; ++i) {
    const char lower = static_cast<char>('a' + i);
    const auto label =
        FindLabel(text, cursor, options_end, {std::string_view(&lower, 1)});
    if (!label) {
      issue(IssueKind::kMissingOption,
            std::string("option ") + kLetters[i] + " missing", b, e);
      return out;
    }
    option_labels[i] = *label;
    cursor = label->end;
  }
  for (size_t i = 0; i < 4; ++i) {
    const size_t text_end = i + 1 < 4 ? option_labels[i + 1].begin : options_end;
    pair.options[i] =
        CleanField(text.substr(option_labels[i].end, text_end - option_labels[i].end));
    if (pair.options[i].empty()) {
      issue(IssueKind::kMissingOption,
            std::string("option ") + kLetters[i] + " has empty text", b, e);
      return out;
    }
  }
  if (!answer) {
    issue(IssueKind::kMissingField, "missing 'answer:' label", b, e);
    return out;
  }

  // First nonblank line is the answer expression; the rest is trailing text.
  size_t line_begin = SkipSpace(text, answer->end);
  line_begin = std::min(line_begin, e);
  size_t line_end = text.find('\n', line_begin);
  if (line_end == std::string_view::npos || line_end > e) line_end = e;
  const std::string_view expression = text.substr(line_begin, line_end - line_begin);
  const auto letter = ExtractAnswerLetter(expression);
  if (!letter) {
    issue(IssueKind::kBadAnswerLetter,
          "cannot read one letter from '" + std::string(text::Trim(expression)) + "'",
          b, e);
    return out;
  }
  pair.answer_letter = *letter;

  std::set<std::string> distinct;
  for (const auto& option : pair.options) distinct.insert(text::CaseFold(option));
  if (distinct.size() < 4) pair.flags.push_back("duplicate_options");

  pair.pair_id = ComputePairId(pair.record_id, pair.question, pair.options);
  out.pair = std::move(pair);

  if (line_end < e) {
    const std::string_view trailing = text.substr(line_end, e - line_end);
    if (ContainsRefusal(trailing)) {
      issue(IssueKind::kRefusalText, "refusal after block " +
                                         std::to_string(start.index),
            line_end, e);
    }
  }
  return out;
}

}  // namespace

std::string_view IssueKindName(IssueKind kind) {
  switch (kind) {
    case IssueKind::kNoBlocks:
      return "no_blocks";
    case IssueKind::kMissingField:
      return "missing_field";
    case IssueKind::kMissingOption:
      return "missing_option";
    case IssueKind::kBadAnswerLetter:
      return "bad_answer_letter";
    case IssueKind::kDuplicateBlock:
      return "duplicate_block";
    case IssueKind::kRefusalText:
      return "refusal_text";
  }
  return "unknown";
}

Json ToJson(const ParseIssue& issue) {
  return Json{{"record_id", issue.record_id},
              {"span", Json::array({issue.span_begin, issue.span_end})},
              {"kind", IssueKindName(issue.kind)},
              {"detail", issue.detail}};
}

ParseResult ParseGeneration(const RawGeneration& generation) {
  ParseResult result;
  const std::string_view text = generation.response_text;
  const std::string& record_id = generation.record_id;
  const std::vector<BlockStart> starts = FindBlockStarts(text);

  const size_t preamble_end = starts.empty() ? text.size() : starts.front().begin;
  const bool preamble_refusal = ContainsRefusal(text.substr(0, preamble_end));
  if (preamble_refusal) {
    result.issues.push_back({record_id, 0, preamble_end, IssueKind::kRefusalText,
                             "refusal before any block"});
  }
  if (starts.empty()) {
    if (!preamble_refusal) {
      std::string detail = "no 'i:<n>' block found";
      if (generation.failed) detail = "generation failed: " + generation.failure_reason;
      result.issues.push_back({record_id, 0, text.size(), IssueKind::kNoBlocks, detail});
    }
    return result;
  }

  std::set<long long> seen_indices;
  for (size_t k = 0; k < starts.size(); ++k) {
    const size_t block_end = k + 1 < starts.size() ? starts[k + 1].begin : text.size();
    if (k >= kMaxBlocks) {
      result.issues.push_back({record_id, starts[k].begin, block_end,
                               IssueKind::kDuplicateBlock,
                               "block beyond the fifth ignored"});
      continue;
    }
    if (!seen_indices.insert(starts[k].index).second) {
      result.issues.push_back({record_id, starts[k].begin, block_end,
                               IssueKind::kDuplicateBlock,
                               "question index " + std::to_string(starts[k].index) +
                                   " repeated"});
      continue;
    }
    BlockOutcome outcome = ParseBlock(text, starts[k], block_end, record_id);
    if (outcome.pair) {
      result.pairs.push_back(std::move(*outcome.pair));
      result.spans.emplace_back(starts[k].begin, block_end);
    }
    for (auto& issue : outcome.issues) result.issues.push_back(std::move(issue));
  }
  return result;
}

std::string RenderTemplate(const std::vector<QAPair>& pairs) {
  std::string out;
  for (const QAPair& pair : pairs) {
    out += "i:" + std::to_string(pair.question_index) + " question:" + pair.question +
           " choice: A:" + pair.options[0] + " B:" + pair.options[1] +
           " C:" + pair.options[2] + " D:" + pair.options[3] + " answer: " +
           std::string(1, pair.answer_letter) + "\n";
  }
  return out;
}

DedupResult DedupPairs(const std::vector<QAPair>& pairs) {
  DedupResult result;
  if (pairs.empty()) return result;
  const std::string& record_id = pairs.front().record_id;
  for (const QAPair& pair : pairs) {
    if (pair.record_id != record_id) {
      throw PreconditionError("DedupPairs: mixed record_ids '" + record_id +
                              "' and '" + pair.record_id + "'");
    }
  }
  std::set<std::string> seen;
  for (const QAPair& pair : pairs) {
    const std::string key = text::CollapseWhitespace(text::CaseFold(pair.question));
    if (seen.insert(key).second) {
      result.kept.push_back(pair);
    } else {
      result.dropped.push_back(pair);
    }
  }
  return result;
}

ParseResult ParseAndDedup(const RawGeneration& generation) {
  ParseResult parsed = ParseGeneration(generation);
  ParseResult result;
  result.issues = std::move(parsed.issues);
  std::unordered_map<std::string, int> first_index;
  for (size_t i = 0; i < parsed.pairs.size(); ++i) {
    QAPair& pair = parsed.pairs[i];
    const std::string key = text::CollapseWhitespace(text::CaseFold(pair.question));
    auto [it, inserted] = first_index.emplace(key, pair.question_index);
    if (inserted) {
      result.pairs.push_back(std::move(pair));
      result.spans.push_back(parsed.spans[i]);
    } else {
      result.issues.push_back({generation.record_id, parsed.spans[i].first,
                               parsed.spans[i].second, IssueKind::kDuplicateBlock,
                               "question repeats block " + std::to_string(it->second)});
    }
  }
  std::stable_sort(result.issues.begin(), result.issues.end(),
                   [](const ParseIssue& a, const ParseIssue& b) {
                     return a.span_begin < b.span_begin;
                   });
  return result;
}

}  // namespace vqacurate::qagen

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

#include "vqacurate/corpus/csv.h"

namespace vqacurate::corpus {

std::vector<CsvRow> ParseCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  size_t pos = 0;
  size_t line = 1;
  while (pos < text.size()) {
    CsvRow row;
    row.line = line;
    std::string field;
    bool in_quotes = false;
    bool was_quoted = false;
    bool done = false;
    while (!done) {
      if (pos >= text.size()) {
        if (in_quotes) row.error = "unterminated quoted field";
        row.fields.push_back(std::move(field));
        break;
      }
      const char c = text[pos];
      if (in_quotes) {
        if (c == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            field.push_back('"');
            pos += 2;
          } else {
            in_quotes = false;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        continue;
      }
      switch (c) {
        case ',':
          row.fields.push_back(std::move(field));
          field.clear();
          was_quoted = false;
          ++pos;
          break;
        case '\r':
          if (pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
          [[fallthrough]];
        case '\n':
          ++pos;
          ++line;
          row.fields.push_back(std::move(field));
          done = true;
          break;
        case '"':
          if (field.empty() && !was_quoted) {
            in_quotes = true;
            was_quoted = true;
            ++pos;
          } else {
            row.error = "quote inside unquoted field";
            // Skip to the end of the physical line.
            while (pos < text.size() && text[pos] != '\n') ++pos;
            if (pos < text.size()) ++pos;
            ++line;
            done = true;
          }
          break;
        default:
          if (was_quoted) {
            row.error = "characters after closing quote";
            while (pos < text.size() && text[pos] != '\n') ++pos;
            if (pos < text.size()) ++pos;
            ++line;
            done = true;
            break;
          }
          field.push_back(c);
          ++pos;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace vqacurate::corpus

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

#ifndef VQACURATE_CORPUS_CSV_H_
#define VQACURATE_CORPUS_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace vqacurate::corpus {

struct CsvRow {
  size_t line = 0;  // 1-based physical line where the record starts.
  std::vector<std::string> fields;
  std::string error;  // Nonempty when the record is malformed.
};

// RFC 4180 reader: comma separated, CRLF or LF record breaks, fields may be
// double-quoted, "" escapes a quote, quoted fields may span lines. A quote
// inside an unquoted field or an unterminated quoted field marks the record
// malformed; parsing resumes at the next line.
std::vector<CsvRow> ParseCsv(std::string_view text);

// Quotes a field when it contains a comma, quote, CR or LF.
std::string CsvEscape(std::string_view field);

}  // namespace vqacurate::corpus

#endif  // VQACURATE_CORPUS_CSV_H_

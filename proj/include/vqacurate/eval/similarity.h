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

#ifndef VQACURATE_EVAL_SIMILARITY_H_
#define VQACURATE_EVAL_SIMILARITY_H_

#include <array>
#include <string>
#include <string_view>

namespace vqacurate::eval {

struct SimilarityBreakdown {
  size_t matched = 0;  // M
  size_t len_a = 0;    // In code points.
  size_t len_b = 0;
  double ratio = 1.0;  // 2M / (len_a + len_b), 1.0 when both are empty.
};

// Ratcliff-Obershelp gestalt matching over code points with no junk
// heuristic. Equal-length longest blocks are chosen by the smallest start in
// `a`, then in `b`. The tie rule makes the value order dependent for some
// inputs (e.g. "bacb" vs "ab").
SimilarityBreakdown SimilarityRatio(std::string_view a, std::string_view b);

// Letter fast path for a bare "a"-"d" (after trim and case fold), otherwise
// the option whose case-folded text is most similar to the case-folded
// prediction; ties go to the earliest option. Returns 'A'-'D'.
char MatchToOption(std::string_view prediction, const std::array<std::string, 4>& options);

}  // namespace vqacurate::eval

#endif  // VQACURATE_EVAL_SIMILARITY_H_

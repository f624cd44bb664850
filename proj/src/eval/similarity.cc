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

#include "vqacurate/eval/similarity.h"

#include <utility>
#include <vector>

#include "vqacurate/common/text.h"

namespace vqacurate::eval {
namespace {

struct Block {
  size_t i = 0;
  size_t j = 0;
  size_t size = 0;
};

// Longest common substring of a[alo, ahi) and b[blo, bhi). Scanning a in
// order and accepting only strictly longer runs keeps the smallest start in
// a; for that start the first j reached is the smallest start in b.
Block LongestMatch(const std::u32string& a, const std::u32string& b, size_t alo, size_t ahi,
                   size_t blo, size_t bhi) {
  Block best{alo, blo, 0};
  std::vector<size_t> prev(bhi - blo + 1, 0);
  std::vector<size_t> cur(bhi - blo + 1, 0);
  for (size_t i = alo; i < ahi; ++i) {
    for (size_t j = blo; j < bhi; ++j) {
      const size_t k = j - blo + 1;
      cur[k] = a[i] == b[j] ? prev[k - 1] + 1 : 0;
      if (cur[k] > best.size) best = {i + 1 - cur[k], j + 1 - cur[k], cur[k]};
    }
    std::swap(prev, cur);
  }
  return best;
}

}  // namespace

SimilarityBreakdown SimilarityRatio(std::string_view a, std::string_view b) {
  const std::u32string ua = text::DecodeUtf8(a);
  const std::u32string ub = text::DecodeUtf8(b);
  SimilarityBreakdown out;
  out.len_a = ua.size();
  out.len_b = ub.size();

  std::vector<std::pair<std::pair<size_t, size_t>, std::pair<size_t, size_t>>> pending;
  pending.push_back({{0, ua.size()}, {0, ub.size()}});
  while (!pending.empty()) {
    const auto [ar, br] = pending.back();
    pending.pop_back();
    if (ar.first >= ar.second || br.first >= br.second) continue;
    const Block block = LongestMatch(ua, ub, ar.first, ar.second, br.first, br.second);
    if (block.size == 0) continue;
    out.matched += block.size;
    pending.push_back({{ar.first, block.i}, {br.first, block.j}});
    pending.push_back({{block.i + block.size, ar.second}, {block.j + block.size, br.second}});
  }

  const size_t total = out.len_a + out.len_b;
  out.ratio = total == 0 ? 1.0 : 2.0 * static_cast<double>(out.matched) /
                                     static_cast<double>(total);
  return out;
}

char MatchToOption(std::string_view prediction, const std::array<std::string, 4>& options) {
  const std::string folded = text::CaseFold(text::Trim(prediction));
  if (folded.size() == 1 && folded[0] >= 'a' && folded[0] <= 'd') {
    return static_cast<char>(folded[0] - 'a' + 'A');
  }
  size_t best = 0;
  double best_ratio = -1.0;
  for (size_t k = 0; k < options.size(); ++k) {
    const double r = SimilarityRatio(folded, text::CaseFold(options[k])).ratio;
    if (r > best_ratio) {
      best_ratio = r;
      best = k;
    }
  }
  return static_cast<char>('A' + best);
}

}  // namespace vqacurate::eval

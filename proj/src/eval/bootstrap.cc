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

#include "vqacurate/eval/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vqacurate/common/error.h"
#include "vqacurate/common/random.h"

namespace vqacurate::eval {

Interval BootstrapCi(size_t n, const Statistic& statistic, const BootstrapSettings& settings) {
  if (n == 0) throw PreconditionError("bootstrap needs a nonempty sample");
  if (settings.resamples == 0) throw PreconditionError("bootstrap needs at least one resample");
  if (!(settings.alpha > 0.0 && settings.alpha < 1.0)) {
    throw PreconditionError("bootstrap alpha must lie in (0, 1)");
  }
  Rng rng(DeriveSeed(settings.seed, {"bootstrap"}));
  std::vector<double> stats(settings.resamples);
  std::vector<size_t> indices(n);
  for (auto& value : stats) {
    for (auto& index : indices) index = rng.UniformIndex(n);
    value = statistic(indices);
  }
  std::sort(stats.begin(), stats.end());
  const double last = static_cast<double>(settings.resamples - 1);
  const auto lo_rank = static_cast<size_t>(std::floor(settings.alpha / 2.0 * last));
  const auto hi_rank = static_cast<size_t>(std::ceil((1.0 - settings.alpha / 2.0) * last));
  return {stats[lo_rank], stats[std::min(hi_rank, settings.resamples - 1)]};
}

Interval BootstrapCi(std::span<const double> values, const BootstrapSettings& settings) {
  return BootstrapCi(
      values.size(),
      [values](std::span<const size_t> indices) {
        double sum = 0.0;
        for (size_t i : indices) sum += values[i];
        return sum / static_cast<double>(indices.size());
      },
      settings);
}

}  // namespace vqacurate::eval

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

#ifndef VQACURATE_EVAL_BOOTSTRAP_H_
#define VQACURATE_EVAL_BOOTSTRAP_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace vqacurate::eval {

struct BootstrapSettings {
  size_t resamples = 1000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Statistic over a resample given as indices into the original sample.
using Statistic = std::function<double(std::span<const size_t>)>;

// Percentile bootstrap. The bounds are order statistics of the resampled
// values at ranks floor(alpha/2 * (B-1)) and ceil((1-alpha/2) * (B-1)), so
// each bound is itself a resample statistic. PreconditionError when n == 0,
// resamples == 0 or alpha is outside (0, 1).
Interval BootstrapCi(size_t n, const Statistic& statistic, const BootstrapSettings& settings);

// Interval for the mean of `values`.
Interval BootstrapCi(std::span<const double> values, const BootstrapSettings& settings);

}  // namespace vqacurate::eval

#endif  // VQACURATE_EVAL_BOOTSTRAP_H_

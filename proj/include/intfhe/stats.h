// Copyright 2026 The intfhe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTFHE_STATS_H_
#define INTFHE_STATS_H_

#include <cstdint>
#include <span>

namespace intfhe {

struct ChiSquareResult {
  double statistic = 0;
  int dof = 0;
  double critical = 0;  // upper quantile at the requested significance
  bool pass = true;     // statistic <= critical
};

// Goodness of fit of observed counts against the uniform distribution.
ChiSquareResult ChiSquareUniform(std::span<const std::uint64_t> counts, double significance);

// Upper bound on a rate estimate: p + sigmas * sqrt(p (1 - p) / n).
double OneSidedUpper(double p, std::uint64_t n, double sigmas = 3.0);

}  // namespace intfhe

#endif  // INTFHE_STATS_H_

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

#include "intfhe/entropy.h"

#include <algorithm>
#include <cmath>

#include "intfhe/errors.h"

namespace intfhe {

EntropyReport EntropyOf(std::span<const double> distribution) {
  if (distribution.empty()) throw InvalidArgument("EntropyOf: empty distribution");
  double total = 0;
  double shannon = 0;
  double squares = 0;
  double peak = 0;
  for (double xi : distribution) {
    if (!(xi >= 0)) throw InvalidArgument("EntropyOf: negative probability");
    total += xi;
    if (xi > 0) shannon -= xi * std::log2(xi);
    squares += xi * xi;
    peak = std::max(peak, xi);
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidArgument("EntropyOf: probabilities do not sum to 1");
  }
  EntropyReport report;
  // -0.0 from a point mass reads oddly in reports.
  report.shannon = shannon + 0.0;
  report.collision = -std::log2(squares) + 0.0;
  report.min_entropy = -std::log2(peak) + 0.0;
  return report;
}

}  // namespace intfhe

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

#include "intfhe/stats.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>

#include "intfhe/errors.h"

namespace intfhe {

ChiSquareResult ChiSquareUniform(std::span<const std::uint64_t> counts, double significance) {
  if (significance <= 0 || significance >= 1) throw InvalidArgument("significance must be in (0,1)");
  ChiSquareResult r;
  if (counts.size() < 2) return r;
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (total <= 0) throw InvalidArgument("no samples");
  const double expected = total / static_cast<double>(counts.size());
  for (std::uint64_t c : counts) {
    const double diff = static_cast<double>(c) - expected;
    r.statistic += diff * diff / expected;
  }
  r.dof = static_cast<int>(counts.size()) - 1;
  boost::math::chi_squared dist(r.dof);
  r.critical = boost::math::quantile(boost::math::complement(dist, significance));
  r.pass = r.statistic <= r.critical;
  return r;
}

double OneSidedUpper(double p, std::uint64_t n, double sigmas) {
  if (n == 0) return 1.0;
  return p + sigmas * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

}  // namespace intfhe

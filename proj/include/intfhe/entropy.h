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

#ifndef INTFHE_ENTROPY_H_
#define INTFHE_ENTROPY_H_

#include <span>

namespace intfhe {

// Shannon (H1), collision (H2) and min-entropy (H-infinity), in bits.
struct EntropyReport {
  double shannon = 0;
  double collision = 0;
  double min_entropy = 0;
};

// Probabilities must be nonnegative and sum to 1 within 1e-9.
EntropyReport EntropyOf(std::span<const double> distribution);

}  // namespace intfhe

#endif  // INTFHE_ENTROPY_H_

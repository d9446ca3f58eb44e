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

#ifndef INTFHE_RANDOM_H_
#define INTFHE_RANDOM_H_

#include <cstdint>
#include <random>

#include "intfhe/numeric.h"

namespace intfhe {

// All randomness in the library is drawn through this interface so that
// tests and reproducible CLI runs can inject a seeded source.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual std::uint64_t NextWord() = 0;

  // Uniform integer with exactly `bits` random bits (value < 2^bits).
  Int Bits(unsigned bits);
  // Uniform in [0, bound). bound must be positive.
  Int Below(const Int& bound);
  // Uniform in [lo, hi).
  Int Range(const Int& lo, const Int& hi);
  std::uint64_t Below(std::uint64_t bound);
  double Unit();
};

// Deterministic stream for tests and `--seed` runs. Not for production keys.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t NextWord() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Operating-system entropy.
class SystemRandom final : public RandomSource {
 public:
  std::uint64_t NextWord() override;

 private:
  std::random_device device_;
};

}  // namespace intfhe

#endif  // INTFHE_RANDOM_H_

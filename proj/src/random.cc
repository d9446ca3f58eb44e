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

#include "intfhe/random.h"

#include <vector>

#include "intfhe/errors.h"

namespace intfhe {

Int RandomSource::Bits(unsigned bits) {
  if (bits == 0) return 0;
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buffer(words);
  for (auto& w : buffer) w = NextWord();
  const unsigned spare = static_cast<unsigned>(words * 64 - bits);
  if (spare > 0) buffer.back() >>= spare;
  Int out;
  // Least significant word first.
  mpz_import(out.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0,
             buffer.data());
  return out;
}

Int RandomSource::Below(const Int& bound) {
  if (bound <= 0) throw InvalidArgument("RandomSource::Below: bound must be positive");
  if (bound == 1) return 0;
  const unsigned bits = BitLength(bound - 1);
  for (;;) {
    Int candidate = Bits(bits);
    if (candidate < bound) return candidate;
  }
}

Int RandomSource::Range(const Int& lo, const Int& hi) {
  if (hi <= lo) throw InvalidArgument("RandomSource::Range: empty range");
  return lo + Below(hi - lo);
}

std::uint64_t RandomSource::Below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("RandomSource::Below: bound must be positive");
  // Lemire-free rejection: discard the top partial block.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t w = NextWord();
    if (w < limit) return w % bound;
  }
}

double RandomSource::Unit() {
  return static_cast<double>(NextWord() >> 11) * 0x1.0p-53;
}

std::uint64_t SystemRandom::NextWord() {
  const std::uint64_t hi = device_();
  const std::uint64_t lo = device_();
  return (hi << 32) ^ lo;
}

}  // namespace intfhe

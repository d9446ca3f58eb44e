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

// Independent reference routines for the test suites. Nothing here calls the
// library's own primality, inversion or evaluation code.

#ifndef INTFHE_TESTS_ORACLES_H_
#define INTFHE_TESTS_ORACLES_H_

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Miller-Rabin with random bases, built on plain modular exponentiation.
inline bool MillerRabin(const mpz_class& n, int rounds, std::uint64_t seed) {
  if (n < 2) return false;
  for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  mpz_class d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  for (int i = 0; i < rounds; ++i) {
    const mpz_class a = rng.get_z_range(n - 3) + 2;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Extended Euclid on machine integers.
inline std::int64_t InverseMod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) return 0;
  return ((t0 % m) + m) % m;
}

inline std::int64_t Mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace oracle

#endif  // INTFHE_TESTS_ORACLES_H_

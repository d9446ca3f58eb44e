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

#ifndef INTFHE_NUMERIC_H_
#define INTFHE_NUMERIC_H_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace intfhe {

using Int = mpz_class;

class RandomSource;

// Least nonnegative residue of a modulo m (m > 0).
Int Mod(const Int& a, const Int& m);

// Residue in [-(m-1)/2, (m-1)/2] (centered representative).
Int CenteredMod(const Int& a, const Int& m);

// x in [1, m) with a*x = 1 (mod m), or nullopt when gcd(a, m) != 1.
std::optional<Int> ModInverse(const Int& a, const Int& m);

Int Gcd(const Int& a, const Int& b);
Int Pow2(unsigned bits);
Int Pow(const Int& base, unsigned long exponent);
// Number of bits in |a|; zero has bit length 0.
unsigned BitLength(const Int& a);

// Unique x mod (m1*m2) with x = r1 (mod m1), x = r2 (mod m2). The moduli
// must be coprime.
Int CrtPair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

// Probabilistic primality with small-prime trial division followed by
// `rounds` Miller-Rabin rounds.
bool IsProbablePrime(const Int& n, int rounds = 40);

// Probable prime in [2^(bits-1), 2^bits]. bits >= 2.
Int GenPrime(unsigned bits, RandomSource& rng);

// The secret prime pair behind a public semiprime.
struct Modulus {
  Int p;
  Int q;
  Int pq;
};

// Draws p with lambda bits and q with eta bits, p != q and p < q.
Modulus GenerateModulus(unsigned lambda, unsigned eta, RandomSource& rng);

// Builds a modulus from known primes (tests, toy examples). Checks
// primality, distinctness and p < q.
Modulus ModulusFromPrimes(const Int& p, const Int& q);

Int ParseInt(const std::string& text);
std::string ToString(const Int& value);

}  // namespace intfhe

#endif  // INTFHE_NUMERIC_H_

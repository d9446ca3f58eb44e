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

#include "intfhe/numeric.h"

#include "intfhe/errors.h"
#include "intfhe/random.h"

namespace intfhe {

Int Mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int CenteredMod(const Int& a, const Int& m) {
  Int r = Mod(a, m);
  if (2 * r >= m) r -= m;
  return r;
}

std::optional<Int> ModInverse(const Int& a, const Int& m) {
  if (m < 2) throw InvalidArgument("ModInverse: modulus must be at least 2");
  Int x;
  if (mpz_invert(x.get_mpz_t(), Mod(a, m).get_mpz_t(), m.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return x;
}

Int Gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int Pow2(unsigned bits) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
  return r;
}

Int Pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

unsigned BitLength(const Int& a) {
  if (a == 0) return 0;
  return static_cast<unsigned>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

Int CrtPair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  auto inv = ModInverse(m1, m2);
  if (!inv) throw InvalidArgument("CrtPair: moduli are not coprime");
  // x = r1 + m1 * ((r2 - r1) * m1^-1 mod m2)
  const Int t = Mod((r2 - r1) * *inv, m2);
  return Mod(r1 + m1 * t, m1 * m2);
}

bool IsProbablePrime(const Int& n, int rounds) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), rounds) != 0;
}

Int GenPrime(unsigned bits, RandomSource& rng) {
  if (bits < 2) throw InvalidArgument("GenPrime: bits must be at least 2");
  const Int lo = Pow2(bits - 1);
  const Int hi = Pow2(bits);
  if (bits <= 20) {
    for (;;) {
      Int candidate = rng.Range(lo, hi + 1);
      if (IsProbablePrime(candidate)) return candidate;
    }
  }
  for (;;) {
    Int start = lo + rng.Bits(bits - 1);
    Int candidate;
    mpz_nextprime(candidate.get_mpz_t(), start.get_mpz_t());
    if (candidate <= hi && IsProbablePrime(candidate)) return candidate;
  }
}

Modulus GenerateModulus(unsigned lambda, unsigned eta, RandomSource& rng) {
  if (lambda < 2 || eta < 2) {
    throw InvalidArgument("GenerateModulus: lambda and eta must be at least 2");
  }
  if (eta < lambda) {
    throw InvalidArgument("GenerateModulus: eta must be at least lambda so that p < q");
  }
  Int p = GenPrime(lambda, rng);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Int q = GenPrime(eta, rng);
    if (q > p) return Modulus{p, q, p * q};
  }
  throw KeyGenerationFailure("GenerateModulus: could not draw q > p");
}

Modulus ModulusFromPrimes(const Int& p, const Int& q) {
  if (!IsProbablePrime(p) || !IsProbablePrime(q)) {
    throw InvalidArgument("ModulusFromPrimes: p and q must be prime");
  }
  if (p >= q) throw InvalidArgument("ModulusFromPrimes: require p < q");
  return Modulus{p, q, p * q};
}

Int ParseInt(const std::string& text) {
  Int out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw Error(ErrorCategory::kParse, "not a decimal integer: '" + text + "'");
  }
  return out;
}

std::string ToString(const Int& value) { return value.get_str(10); }

}  // namespace intfhe

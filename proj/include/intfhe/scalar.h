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

#ifndef INTFHE_SCALAR_H_
#define INTFHE_SCALAR_H_

#include <optional>

#include "intfhe/numeric.h"
#include "intfhe/params.h"

namespace intfhe {

class RandomSource;

// HE1 when kappa is absent, HE1N otherwise.
struct ScalarSecretKey {
  Int p;
  Int q;
  std::optional<Int> kappa;
  Int M;  // exclusive plaintext bound
  bool signed_mode = false;
  int lambda = 0;
  int eta = 0;
  bool insecure_toy = false;

  bool noisy() const { return kappa.has_value(); }
};

struct ScalarPublicParams {
  Int pq;
  Int capacity;  // 2^(lambda-1) <= p; running bounds must stay below it
  bool signed_mode = false;
  bool insecure_toy = false;
};

struct ScalarCiphertext {
  Int value;
  Int bound;

  bool operator==(const ScalarCiphertext&) const = default;
};

struct ScalarKeys {
  ScalarSecretKey sk;
  ScalarPublicParams pp;
};

ScalarKeys ScalarKeygen(const ParameterSet& params, RandomSource& rng, bool signed_mode = false);

// Toy keys from known primes. capacity defaults to 2^(bitlen(p)-1).
ScalarKeys ScalarKeysFromPrimes(const Int& p, const Int& q, std::optional<Int> kappa,
                                const Int& M, std::optional<Int> capacity = std::nullopt,
                                bool signed_mode = false);

// Fresh-ciphertext plaintext bound: M for HE1, M + kappa^2 for HE1N, doubled in
// signed mode.
Int FreshBound(const ScalarSecretKey& sk);

// Encrypts with r uniform in [1, q) (and s uniform in [0, kappa) for HE1N).
ScalarCiphertext Encrypt(const Int& m, const ScalarSecretKey& sk, const ScalarPublicParams& pp,
                         RandomSource& rng);

// Pinned-randomness encryption: value = m + s*kappa + r*p mod pq. Test hook;
// s is ignored for HE1.
ScalarCiphertext EncryptWith(const Int& m, const Int& r, const Int& s, const ScalarSecretKey& sk,
                             const ScalarPublicParams& pp);

// c mod p (then mod kappa for HE1N). Throws OverflowRisk if c.bound >= p
// unless `force` is set.
Int Decrypt(const ScalarCiphertext& c, const ScalarSecretKey& sk, bool force = false);

ScalarCiphertext Add(const ScalarCiphertext& a, const ScalarCiphertext& b,
                     const ScalarPublicParams& pp);
ScalarCiphertext Mult(const ScalarCiphertext& a, const ScalarCiphertext& b,
                      const ScalarPublicParams& pp);

// Trivial public encoding of a known constant.
ScalarCiphertext EncodeConstant(const Int& value, const ScalarPublicParams& pp);

// Adapter for the generic circuit evaluator.
struct ScalarOps {
  using Ciphertext = ScalarCiphertext;
  const ScalarPublicParams& pp;

  Ciphertext Add(const Ciphertext& a, const Ciphertext& b) const { return intfhe::Add(a, b, pp); }
  Ciphertext Mult(const Ciphertext& a, const Ciphertext& b) const {
    return intfhe::Mult(a, b, pp);
  }
  Ciphertext Constant(const Int& v) const { return EncodeConstant(v, pp); }
};

}  // namespace intfhe

#endif  // INTFHE_SCALAR_H_

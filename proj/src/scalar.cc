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

#include "intfhe/scalar.h"

#include "intfhe/errors.h"
#include "intfhe/random.h"

namespace intfhe {
namespace {

void CheckRange(const Int& m, const ScalarSecretKey& sk) {
  const bool ok = sk.signed_mode ? (m > -sk.M && m < sk.M) : (m >= 0 && m < sk.M);
  if (!ok) throw InvalidArgument("plaintext " + ToString(m) + " outside the admissible range");
}

Int CheckedBound(Int bound, const ScalarPublicParams& pp) {
  if (bound >= pp.capacity) {
    throw OverflowRisk("plaintext bound " + ToString(bound) + " reached the capacity " +
                       ToString(pp.capacity));
  }
  return bound;
}

}  // namespace

ScalarKeys ScalarKeygen(const ParameterSet& params, RandomSource& rng, bool signed_mode) {
  if (IsVector(params.scheme)) throw InvalidArgument("ScalarKeygen: not a scalar scheme");
  Validate(params);
  const Modulus mod = GenerateModulus(params.lambda, params.eta, rng);
  ScalarKeys keys;
  keys.sk.p = mod.p;
  keys.sk.q = mod.q;
  keys.sk.M = params.M;
  keys.sk.signed_mode = signed_mode;
  keys.sk.lambda = params.lambda;
  keys.sk.eta = params.eta;
  keys.sk.insecure_toy = params.insecure_toy;
  if (IsNoisy(params.scheme)) {
    // kappa has exactly kappa_bits bits; p has more, so kappa < p.
    keys.sk.kappa = Pow2(params.kappa_bits - 1) + rng.Bits(params.kappa_bits - 1);
  }
  keys.pp.pq = mod.pq;
  keys.pp.capacity = BoundCapacity(params);
  keys.pp.signed_mode = signed_mode;
  keys.pp.insecure_toy = params.insecure_toy;
  return keys;
}

ScalarKeys ScalarKeysFromPrimes(const Int& p, const Int& q, std::optional<Int> kappa, const Int& M,
                                std::optional<Int> capacity, bool signed_mode) {
  const Modulus mod = ModulusFromPrimes(p, q);
  if (kappa && (*kappa < 1 || *kappa >= p)) throw InvalidArgument("kappa must lie in [1, p)");
  ScalarKeys keys;
  keys.sk.p = mod.p;
  keys.sk.q = mod.q;
  keys.sk.kappa = kappa;
  keys.sk.M = M;
  keys.sk.signed_mode = signed_mode;
  keys.sk.lambda = static_cast<int>(BitLength(p));
  keys.sk.eta = static_cast<int>(BitLength(q));
  keys.sk.insecure_toy = true;
  keys.pp.pq = mod.pq;
  keys.pp.capacity = capacity ? *capacity : Pow2(BitLength(p) - 1);
  keys.pp.signed_mode = signed_mode;
  keys.pp.insecure_toy = true;
  return keys;
}

Int FreshBound(const ScalarSecretKey& sk) {
  Int bound = sk.M;
  if (sk.kappa) bound += *sk.kappa * *sk.kappa;
  if (sk.signed_mode) bound *= 2;
  return bound;
}

ScalarCiphertext Encrypt(const Int& m, const ScalarSecretKey& sk, const ScalarPublicParams& pp,
                         RandomSource& rng) {
  const Int r = rng.Range(1, sk.q);
  const Int s = sk.kappa ? rng.Below(*sk.kappa) : Int(0);
  return EncryptWith(m, r, s, sk, pp);
}

ScalarCiphertext EncryptWith(const Int& m, const Int& r, const Int& s, const ScalarSecretKey& sk,
                             const ScalarPublicParams& pp) {
  CheckRange(m, sk);
  Int value = m + r * sk.p;
  if (sk.kappa) value += s * *sk.kappa;
  return ScalarCiphertext{Mod(value, pp.pq), FreshBound(sk)};
}

Int Decrypt(const ScalarCiphertext& c, const ScalarSecretKey& sk, bool force) {
  if (c.bound >= sk.p && !force) {
    throw OverflowRisk("ciphertext bound " + ToString(c.bound) +
                       " is not below p; decryption is unreliable");
  }
  Int m = sk.signed_mode ? CenteredMod(c.value, sk.p) : Mod(c.value, sk.p);
  if (sk.kappa) m = sk.signed_mode ? CenteredMod(m, *sk.kappa) : Mod(m, *sk.kappa);
  return m;
}

ScalarCiphertext Add(const ScalarCiphertext& a, const ScalarCiphertext& b,
                     const ScalarPublicParams& pp) {
  return ScalarCiphertext{Mod(a.value + b.value, pp.pq), CheckedBound(a.bound + b.bound, pp)};
}

ScalarCiphertext Mult(const ScalarCiphertext& a, const ScalarCiphertext& b,
                      const ScalarPublicParams& pp) {
  return ScalarCiphertext{Mod(a.value * b.value, pp.pq), CheckedBound(a.bound * b.bound, pp)};
}

ScalarCiphertext EncodeConstant(const Int& value, const ScalarPublicParams& pp) {
  if (value < 0 && !pp.signed_mode) {
    throw InvalidArgument("negative constant requires signed mode");
  }
  Int bound = abs(value);
  if (pp.signed_mode) bound *= 2;
  return ScalarCiphertext{Mod(value, pp.pq), CheckedBound(bound, pp)};
}

}  // namespace intfhe

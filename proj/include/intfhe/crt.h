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

#ifndef INTFHE_CRT_H_
#define INTFHE_CRT_H_

#include <span>
#include <vector>

#include "intfhe/circuit.h"
#include "intfhe/numeric.h"
#include "intfhe/params.h"
#include "intfhe/vector.h"

namespace intfhe {

class RandomSource;

struct CrtSecretKey {
  Int kappa;
  Int M;
  std::vector<VectorSecretKey> shards;
  Int Pi;
  std::vector<Int> weights;  // M_j = Pi / p_j
  std::vector<Int> mu;       // M_j^-1 mod p_j
  bool insecure_toy = false;

  int K() const { return static_cast<int>(shards.size()); }
};

struct CrtPublicParams {
  std::vector<VectorPublicParams> shards;  // each carries the Pi-level capacity
  Int capacity;

  int K() const { return static_cast<int>(shards.size()); }
};

struct CrtCiphertext {
  std::vector<Vec> shards;
  Int bound;

  bool operator==(const CrtCiphertext&) const = default;
};

struct CrtKeys {
  CrtSecretKey sk;
  CrtPublicParams pp;
};

// Per-shard bit-length covering `bound_bits` across K shards with margin.
int ShardLambda(int bound_bits, int K);

CrtKeys CrtKeygen(const ParameterSet& params, RandomSource& rng);

// Shards built over caller-chosen moduli (toy and test use).
CrtKeys CrtKeysFromModuli(std::span<const Modulus> moduli, const Int& kappa, const Int& M,
                          RandomSource& rng, std::optional<Int> capacity = std::nullopt);

CrtCiphertext CrtEncrypt(const Int& m, const CrtSecretKey& sk, const CrtPublicParams& pp,
                         RandomSource& rng);

// Pinned randomness: one s for all shards, r[j] and t[j] per shard.
CrtCiphertext CrtEncryptWith(const Int& m, const Int& s, std::span<const Int> r,
                             std::span<const Int> t, const CrtSecretKey& sk,
                             const CrtPublicParams& pp);

VectorCiphertext ShardOf(const CrtCiphertext& c, int j);

std::vector<VectorCiphertext> CrtEvalShard(int j, const ArithCircuit& circuit,
                                           std::span<const VectorCiphertext> inputs,
                                           const CrtPublicParams& pp);

CrtCiphertext Assemble(std::span<const std::vector<VectorCiphertext>> shard_outputs, int output);

// Sum of residues x_j M_j mu_j mod Pi.
Int CrtCombine(std::span<const Int> residues, const CrtSecretKey& sk);

Int CrtDecrypt(const CrtCiphertext& c, const CrtSecretKey& sk, bool force = false);

CrtCiphertext Add(const CrtCiphertext& a, const CrtCiphertext& b, const CrtPublicParams& pp);
CrtCiphertext Mult(const CrtCiphertext& a, const CrtCiphertext& b, const CrtPublicParams& pp);
CrtCiphertext EncodeConstant(const Int& value, const CrtPublicParams& pp);

struct CrtOps {
  using Ciphertext = CrtCiphertext;
  const CrtPublicParams& pp;

  Ciphertext Add(const Ciphertext& a, const Ciphertext& b) const { return intfhe::Add(a, b, pp); }
  Ciphertext Mult(const Ciphertext& a, const Ciphertext& b) const {
    return intfhe::Mult(a, b, pp);
  }
  Ciphertext Constant(const Int& v) const { return EncodeConstant(v, pp); }
};

}  // namespace intfhe

#endif  // INTFHE_CRT_H_

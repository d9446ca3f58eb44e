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

#include "intfhe/crt.h"

#include <algorithm>

#include "intfhe/errors.h"
#include "intfhe/random.h"

namespace intfhe {
namespace {

Int CheckedBound(Int bound, const CrtPublicParams& pp) {
  if (bound >= pp.capacity) {
    throw OverflowRisk("plaintext bound " + ToString(bound) + " reached the CRT capacity " +
                       ToString(pp.capacity));
  }
  return bound;
}

void CheckShape(const CrtCiphertext& a, const CrtPublicParams& pp) {
  if (static_cast<int>(a.shards.size()) != pp.K()) {
    throw InvalidArgument("ciphertext has " + std::to_string(a.shards.size()) +
                          " shards, expected " + std::to_string(pp.K()));
  }
}

}  // namespace

int ShardLambda(int bound_bits, int K) {
  if (K < 1) throw InvalidArgument("ShardLambda: K must be >= 1");
  return (bound_bits + K + K - 1) / K + 1;
}

CrtKeys CrtKeysFromModuli(std::span<const Modulus> moduli, const Int& kappa, const Int& M,
                          RandomSource& rng, std::optional<Int> capacity) {
  if (moduli.empty()) throw InvalidArgument("CRT keys need at least one shard");
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = i + 1; j < moduli.size(); ++j)
      if (moduli[i].p == moduli[j].p) throw InvalidArgument("shard primes p_j must be distinct");

  CrtKeys keys;
  keys.sk.kappa = kappa;
  keys.sk.M = M;
  keys.sk.Pi = 1;
  unsigned cap_bits = 0;
  for (const auto& m : moduli) {
    keys.sk.Pi *= m.p;
    cap_bits += BitLength(m.p) - 1;
  }
  keys.pp.capacity = capacity ? *capacity : Pow2(cap_bits);
  if (keys.pp.capacity > keys.sk.Pi) throw InvalidArgument("CRT capacity exceeds Pi");

  BuildOptions opts;
  opts.capacity = keys.pp.capacity;
  for (const auto& m : moduli) {
    VectorKeys shard = BuildKeysForModulus(m, 2, kappa, M, rng, opts);
    keys.sk.shards.push_back(std::move(shard.sk));
    keys.pp.shards.push_back(std::move(shard.pp));
    const Int Mj = keys.sk.Pi / m.p;
    keys.sk.weights.push_back(Mj);
    keys.sk.mu.push_back(*ModInverse(Mj, m.p));
  }
  keys.sk.insecure_toy = true;
  return keys;
}

CrtKeys CrtKeygen(const ParameterSet& params, RandomSource& rng) {
  if (params.scheme != Scheme::kHE2NCRT) throw InvalidArgument("CrtKeygen: scheme is not HE2NCRT");
  Validate(params);
  const int K = params.K;
  const int lambda = ShardLambda(params.lambda, K);
  const int eta = std::max(static_cast<int>((static_cast<long>(lambda) * lambda +
                                             params.rho_prime - 1) / params.rho_prime) - lambda,
                           lambda + 1);
  if (params.kappa_bits >= lambda) {
    throw InvalidArgument("shard primes of " + std::to_string(lambda) +
                          " bits cannot exceed kappa of " + std::to_string(params.kappa_bits) +
                          " bits; use fewer shards");
  }
  std::vector<Modulus> moduli;
  while (static_cast<int>(moduli.size()) < K) {
    Modulus m = GenerateModulus(lambda, eta, rng);
    const bool dup = std::any_of(moduli.begin(), moduli.end(),
                                 [&](const Modulus& o) { return o.p == m.p; });
    if (!dup) moduli.push_back(std::move(m));
  }
  const Int kappa = Pow2(params.kappa_bits - 1) + rng.Bits(params.kappa_bits - 1);
  CrtKeys keys = CrtKeysFromModuli(moduli, kappa, params.M, rng);
  keys.sk.insecure_toy = params.insecure_toy;
  for (auto& s : keys.sk.shards) {
    s.insecure_toy = params.insecure_toy;
    s.lambda = lambda;
    s.eta = eta;
  }
  for (auto& s : keys.pp.shards) s.insecure_toy = params.insecure_toy;
  return keys;
}

CrtCiphertext CrtEncrypt(const Int& m, const CrtSecretKey& sk, const CrtPublicParams& pp,
                         RandomSource& rng) {
  const Int s = rng.Below(sk.kappa);
  std::vector<Int> r;
  std::vector<Int> t;
  for (int j = 0; j < sk.K(); ++j) {
    r.push_back(rng.Below(sk.shards[j].q));
    t.push_back(rng.Below(pp.shards[j].pq));
  }
  return CrtEncryptWith(m, s, r, t, sk, pp);
}

CrtCiphertext CrtEncryptWith(const Int& m, const Int& s, std::span<const Int> r,
                             std::span<const Int> t, const CrtSecretKey& sk,
                             const CrtPublicParams& pp) {
  const int K = sk.K();
  if (static_cast<int>(r.size()) != K || static_cast<int>(t.size()) != K) {
    throw InvalidArgument("need one r and one t per shard");
  }
  CrtCiphertext c;
  for (int j = 0; j < K; ++j) {
    const Int tj[1] = {t[j]};
    VectorCiphertext shard = EncryptWith(m, r[j], s, tj, sk.shards[j], pp.shards[j]);
    c.shards.push_back(std::move(shard.v));
    c.bound = shard.bound;
  }
  return c;
}

VectorCiphertext ShardOf(const CrtCiphertext& c, int j) {
  return VectorCiphertext{c.shards.at(j), c.bound};
}

std::vector<VectorCiphertext> CrtEvalShard(int j, const ArithCircuit& circuit,
                                           std::span<const VectorCiphertext> inputs,
                                           const CrtPublicParams& pp) {
  if (j < 0 || j >= pp.K()) throw InvalidArgument("shard index out of range");
  return Evaluate(circuit, inputs, VectorOps{pp.shards[j]});
}

CrtCiphertext Assemble(std::span<const std::vector<VectorCiphertext>> shard_outputs, int output) {
  CrtCiphertext c;
  for (const auto& outs : shard_outputs) {
    const VectorCiphertext& v = outs.at(output);
    c.shards.push_back(v.v);
    c.bound = v.bound;
  }
  return c;
}

Int CrtCombine(std::span<const Int> residues, const CrtSecretKey& sk) {
  Int x = 0;
  for (int j = 0; j < sk.K(); ++j) x += residues[j] * sk.weights[j] * sk.mu[j];
  return Mod(x, sk.Pi);
}

Int CrtDecrypt(const CrtCiphertext& c, const CrtSecretKey& sk, bool force) {
  if (static_cast<int>(c.shards.size()) != sk.K()) throw InvalidArgument("shard count mismatch");
  if (c.bound >= sk.Pi && !force) {
    throw OverflowRisk("ciphertext bound " + ToString(c.bound) + " is not below Pi");
  }
  std::vector<Int> residues;
  for (int j = 0; j < sk.K(); ++j) {
    residues.push_back(DecryptResidue(VectorCiphertext{c.shards[j], c.bound}, sk.shards[j]));
  }
  return Mod(CrtCombine(residues, sk), sk.kappa);
}

CrtCiphertext Add(const CrtCiphertext& a, const CrtCiphertext& b, const CrtPublicParams& pp) {
  CheckShape(a, pp);
  CheckShape(b, pp);
  CrtCiphertext c;
  c.bound = CheckedBound(a.bound + b.bound, pp);
  for (int j = 0; j < pp.K(); ++j) c.shards.push_back(AddVec(a.shards[j], b.shards[j], pp.shards[j].pq));
  return c;
}

CrtCiphertext Mult(const CrtCiphertext& a, const CrtCiphertext& b, const CrtPublicParams& pp) {
  CheckShape(a, pp);
  CheckShape(b, pp);
  CrtCiphertext c;
  c.bound = CheckedBound(a.bound * b.bound, pp);
  for (int j = 0; j < pp.K(); ++j) c.shards.push_back(MultRaw(a.shards[j], b.shards[j], pp.shards[j]));
  return c;
}

CrtCiphertext EncodeConstant(const Int& value, const CrtPublicParams& pp) {
  if (value < 0) throw InvalidArgument("CRT constants must be nonnegative");
  CrtCiphertext c;
  c.bound = CheckedBound(value, pp);
  for (const auto& s : pp.shards) c.shards.push_back(Vec(2, Mod(value, s.pq)));
  return c;
}

}  // namespace intfhe

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

#include <gtest/gtest.h>

#include "intfhe/crt.h"
#include "intfhe/errors.h"
#include "intfhe/random.h"

namespace intfhe {
namespace {

std::vector<Modulus> ToyModuli() {
  return {Modulus{157, 163, 157 * 163}, Modulus{151, 167, 151 * 167}};
}

TEST(Crt, ShardLambda) {
  EXPECT_EQ(ShardLambda(52, 2), 28);
  EXPECT_EQ(ShardLambda(100, 1), 102);
  EXPECT_EQ(ShardLambda(100, 4), 27);
  EXPECT_THROW(ShardLambda(10, 0), InvalidArgument);
}

TEST(Crt, ToyKeysAndCombine) {
  SeededRandom rng(41);
  const auto moduli = ToyModuli();
  auto keys = CrtKeysFromModuli(moduli, 5, 2, rng);
  EXPECT_EQ(keys.sk.Pi, 157 * 151);
  EXPECT_EQ(keys.pp.capacity, Pow2(14));
  EXPECT_EQ(keys.sk.K(), 2);
  // Independent CRT: x = 1000 mod 157 and mod 151.
  const Int residues[] = {1000 % 157, 1000 % 151};
  EXPECT_EQ(CrtCombine(residues, keys.sk), 1000);
  const std::vector<Modulus> dup{moduli[0], moduli[0]};
  EXPECT_THROW(CrtKeysFromModuli(dup, 5, 2, rng), InvalidArgument);
}

TEST(Crt, SharedNoiseAcrossShards) {
  SeededRandom rng(42);
  auto keys = CrtKeysFromModuli(ToyModuli(), 5, 2, rng);
  const Int r[] = {3, 4};
  const Int t[] = {7, 9};
  const auto c = CrtEncryptWith(1, 3, r, t, keys.sk, keys.pp);
  ASSERT_EQ(c.shards.size(), 2u);
  for (int j = 0; j < 2; ++j) {
    EXPECT_EQ(DecryptResidue(ShardOf(c, j), keys.sk.shards[j]), 16);  // 1 + 3*5
  }
  EXPECT_EQ(CrtDecrypt(c, keys.sk), 1);
}

TEST(Crt, ShardwiseEvaluationMatchesJoint) {
  SeededRandom rng(43);
  auto keys = CrtKeygen(DeriveParams(Scheme::kHE2NCRT, 2, 2, 4, 2, 2), rng);
  const Int kappa = keys.sk.kappa;
  const auto circuit = InnerProductCircuit(4, 2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Int> plain;
    std::vector<CrtCiphertext> cts;
    for (int i = 0; i < 8; ++i) {
      plain.push_back(rng.Below(16));
      cts.push_back(CrtEncrypt(plain.back(), keys.sk, keys.pp, rng));
    }
    const auto joint = Evaluate<CrtOps>(circuit, cts, CrtOps{keys.pp});
    std::vector<std::vector<VectorCiphertext>> per_shard;
    for (int j = 0; j < keys.pp.K(); ++j) {
      std::vector<VectorCiphertext> inputs;
      for (const auto& c : cts) inputs.push_back(ShardOf(c, j));
      per_shard.push_back(CrtEvalShard(j, circuit, inputs, keys.pp));
    }
    const auto assembled = Assemble(per_shard, 0);
    EXPECT_EQ(assembled.shards, joint[0].shards);
    EXPECT_EQ(CrtDecrypt(assembled, keys.sk), Mod(EvaluatePlain(circuit, plain)[0], kappa));
  }
}

TEST(Crt, KeygenShape) {
  SeededRandom rng(44);
  const auto params = DeriveParams(Scheme::kHE2NCRT, 2, 2, 4, 2, 3);
  auto keys = CrtKeygen(params, rng);
  EXPECT_EQ(keys.sk.K(), 3);
  const int ls = ShardLambda(params.lambda, 3);
  for (const auto& s : keys.sk.shards) {
    EXPECT_EQ(BitLength(s.p), static_cast<unsigned>(ls));
    EXPECT_GT(s.q, s.p);
  }
  EXPECT_GE(BitLength(keys.pp.capacity), static_cast<unsigned>(params.lambda));
  EXPECT_EQ(BitLength(keys.sk.kappa), static_cast<unsigned>(params.kappa_bits));
}

TEST(Crt, TooManyShardsRejected) {
  SeededRandom rng(45);
  EXPECT_THROW(CrtKeygen(DeriveParams(Scheme::kHE2NCRT, 2, 2, 4, 2, 8), rng), InvalidArgument);
  EXPECT_THROW(CrtKeygen(DeriveParams(Scheme::kHE2N, 2, 2, 4), rng), InvalidArgument);
}

TEST(Crt, OverflowGuards) {
  SeededRandom rng(46);
  auto keys = CrtKeysFromModuli(ToyModuli(), 5, 2, rng);
  auto c = CrtEncrypt(1, keys.sk, keys.pp, rng);
  c.bound = keys.sk.Pi;
  EXPECT_THROW(CrtDecrypt(c, keys.sk), OverflowRisk);
  EXPECT_NO_THROW(CrtDecrypt(c, keys.sk, true));
  c.bound = keys.pp.capacity / 2;
  EXPECT_THROW(Add(c, c, keys.pp), OverflowRisk);
}

}  // namespace
}  // namespace intfhe

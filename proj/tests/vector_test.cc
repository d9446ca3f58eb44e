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

#include "intfhe/errors.h"
#include "intfhe/random.h"
#include "intfhe/vector.h"

namespace intfhe {
namespace {

const Modulus kToy{11, 13, 143};

TEST(Augment, PairOrderAndMatrix) {
  const auto pairs = PairOrder(4);
  ASSERT_EQ(pairs.size(), 6u);
  EXPECT_EQ(pairs[0], std::make_pair(0, 1));
  EXPECT_EQ(pairs[2], std::make_pair(0, 3));
  EXPECT_EQ(pairs[3], std::make_pair(1, 2));
  EXPECT_EQ(AugmentedSize(2), 3);
  EXPECT_EQ(AugmentedSize(4), 10);

  const Vec v{5, 7, 9};
  EXPECT_EQ(Augment(v, 1000), (Vec{5, 7, 9, 3, 1, 5}));
  const auto u = AugmentationMatrix(3);
  EXPECT_EQ(Multiply(u, v, 1000), Augment(v, 1000));
  EXPECT_THROW(Augment(Vec{1}, 7), InvalidArgument);
}

TEST(VectorToy, WorkedExampleK2) {
  const std::vector<Vec> a{Vec{2, 5}};
  ASSERT_FALSE(BasisNeedsRegeneration(kToy, a));
  SeededRandom rng(31);
  auto keys = BuildKeysWithBasis(kToy, a, std::nullopt, 4, rng, {.capacity = Int(143)});
  EXPECT_EQ(Reduce(keys.sk.gamma, 11), (Vec{9, 3}));
  const Int t[] = {4};
  const auto c = EncryptWith(3, 1, 0, t, keys.sk, keys.pp);
  EXPECT_EQ(c.v, (Vec{22, 34}));
  EXPECT_EQ(Decrypt(c, keys.sk), 3);
}

TEST(VectorToy, DegenerateBasesRejected) {
  EXPECT_TRUE(BasisNeedsRegeneration(kToy, std::vector<Vec>{Vec{2, 13}}));  // 13 = 2 mod 11
  EXPECT_TRUE(BasisNeedsRegeneration(kToy, std::vector<Vec>{Vec{0, 5}}));
  EXPECT_TRUE(BasisNeedsRegeneration(kToy, std::vector<Vec>{Vec{13, 5}}));  // 0 mod 13
  SeededRandom rng(32);
  EXPECT_THROW(BuildKeysWithBasis(kToy, std::vector<Vec>{Vec{2, 13}}, std::nullopt, 4, rng),
               KeyGenerationFailure);
}

TEST(VectorToy, ClosedFormMatchesGeneralSolve) {
  const Modulus mod{1009, 1013, 1009 * 1013};
  const std::vector<Vec> a{Vec{17, 401}};
  for (int seed = 0; seed < 20; ++seed) {
    SeededRandom r1(seed), r2(seed);
    auto closed = BuildKeysWithBasis(mod, a, std::nullopt, 4, r1, {.closed_form_k2 = true});
    auto general = BuildKeysWithBasis(mod, a, std::nullopt, 4, r2, {.closed_form_k2 = false});
    EXPECT_EQ(closed.pp.R, general.pp.R);
    const auto& h = closed.hidden;
    EXPECT_EQ(ClosedFormReencryption2(mod, a[0], h.rho.at({1, 1}), h.sigma.at({1, 1})[0]),
              closed.pp.R);
  }
}

// R maps the linear columns back and products onto the hidden constants.
void CheckRelation(const VectorKeys& keys, const Modulus& mod) {
  const int k = keys.sk.k;
  const auto& basis = keys.sk.basis;
  std::vector<Vec> star;
  for (const auto& b : basis) star.push_back(Augment(b, mod.pq));
  for (int i = 0; i < k; ++i) EXPECT_EQ(Multiply(keys.pp.R, star[i], mod.pq), Reduce(basis[i], mod.pq));
  for (int i = 1; i < k; ++i)
    for (int j = i; j < k; ++j) {
      const Vec lhs = Multiply(keys.pp.R, Hadamard(star[i], star[j], mod.pq), mod.pq);
      Vec rhs(k, Int(keys.hidden.rho.at({i, j}) * mod.p));
      for (int l = 1; l < k; ++l)
        rhs = AddVec(rhs, Scale(basis[l], keys.hidden.sigma.at({i, j})[l - 1], mod.pq), mod.pq);
      EXPECT_EQ(lhs, Reduce(rhs, mod.pq)) << i << "," << j;
    }
}

TEST(VectorKeys, ReencryptionRelationHolds) {
  SeededRandom rng(33);
  for (int k = 2; k <= 5; ++k)
    for (bool fix : {false, true}) {
      const Modulus mod = GenerateModulus(48, 64, rng);
      auto keys = BuildKeysForModulus(mod, k, std::nullopt, 16, rng, {.associativity_fix = fix});
      EXPECT_EQ(keys.pp.R.rows(), static_cast<std::size_t>(k));
      EXPECT_EQ(keys.pp.R.cols(), static_cast<std::size_t>(AugmentedSize(k)));
      CheckRelation(keys, mod);
      // gamma . basis_j = [j == 0]
      for (int j = 0; j < k; ++j) EXPECT_EQ(Dot(keys.sk.gamma, keys.sk.basis[j], mod.pq), j == 0 ? 1 : 0);
    }
}

TEST(VectorKeys, AssociativityFixMakesRhoMultiplicative) {
  SeededRandom rng(34);
  const Modulus mod = GenerateModulus(48, 64, rng);
  auto keys = BuildKeysForModulus(mod, 4, std::nullopt, 16, rng, {.associativity_fix = true});
  const auto& h = keys.hidden;
  ASSERT_TRUE(h.associativity_fix);
  for (int i = 1; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      EXPECT_EQ(h.rho.at({i, j}), Mod(h.rho_single[i - 1] * h.rho_single[j - 1], mod.q));
      Int dot = 0;
      for (int l = 1; l < 4; ++l) dot += h.sigma.at({i, j})[l - 1] * h.rho_single[l - 1];
      EXPECT_EQ(Mod(dot, mod.q), Mod(h.tau * h.rho.at({i, j}), mod.q));
    }
}

struct Case {
  Scheme scheme;
  int k;
};

class VectorRandomized : public ::testing::TestWithParam<Case> {};

TEST_P(VectorRandomized, InnerProductsAndAssociativityDecrypt) {
  const auto [scheme, k] = GetParam();
  const auto params = DeriveParams(scheme, 3, 2, 8, k);
  SeededRandom rng(35 + k);
  auto keys = BuildKeys(params, rng);
  EXPECT_EQ(keys.sk.k, k);
  const Int wrap = keys.sk.noisy() ? *keys.sk.kappa : Int(0);
  auto expect = [&](const Int& x) { return keys.sk.noisy() ? Mod(x, wrap) : x; };
  for (int t = 0; t < 40; ++t) {
    const Int x = rng.Below(params.M), y = rng.Below(params.M), z = rng.Below(params.M);
    const auto cx = Encrypt(x, keys.sk, keys.pp, rng);
    const auto cy = Encrypt(y, keys.sk, keys.pp, rng);
    const auto cz = Encrypt(z, keys.sk, keys.pp, rng);
    EXPECT_EQ(Decrypt(cx, keys.sk), x);
    EXPECT_EQ(Decrypt(Add(cx, cy, keys.pp), keys.sk), expect(x + y));
    EXPECT_EQ(Decrypt(Mult(Mult(cx, cy, keys.pp), cz, keys.pp), keys.sk), expect(x * y * z));
    EXPECT_EQ(Decrypt(Mult(cx, Mult(cy, cz, keys.pp), keys.pp), keys.sk), expect(x * y * z));
    EXPECT_EQ(Decrypt(Mult(cx, EncodeConstant(3, keys.pp), keys.pp), keys.sk), expect(3 * x));
  }
}

INSTANTIATE_TEST_SUITE_P(Schemes, VectorRandomized,
                         ::testing::Values(Case{Scheme::kHE2, 2}, Case{Scheme::kHE2N, 2},
                                           Case{Scheme::kHEk, 3}, Case{Scheme::kHEkN, 3},
                                           Case{Scheme::kHEk, 4}, Case{Scheme::kHEkN, 5}));

TEST(VectorScheme, CapacityAndSub) {
  SeededRandom rng(36);
  const Modulus mod{1009, 1013, 1009 * 1013};
  auto keys = BuildKeysForModulus(mod, 2, std::nullopt, 16, rng);  // capacity 512
  const auto a = Encrypt(15, keys.sk, keys.pp, rng);
  const auto b = Encrypt(4, keys.sk, keys.pp, rng);
  EXPECT_EQ(DecryptResidue(Sub(a, b, keys.pp), keys.sk), 11);
  const auto sq = Mult(a, a, keys.pp);
  EXPECT_EQ(Decrypt(sq, keys.sk), 225);
  EXPECT_THROW(Add(sq, sq, keys.pp), OverflowRisk);
}

TEST(VectorScheme, EncryptResidueAndFreshness) {
  SeededRandom rng(37);
  const Modulus mod{1009, 1013, 1009 * 1013};
  auto keys = BuildKeysForModulus(mod, 3, Int(5), 2, rng);
  const auto c = EncryptResidue(1000, 7, keys.sk, keys.pp, rng);
  EXPECT_EQ(c.bound, 7);
  EXPECT_EQ(DecryptResidue(c, keys.sk), 1000);
  EXPECT_NE(Encrypt(1, keys.sk, keys.pp, rng).v, Encrypt(1, keys.sk, keys.pp, rng).v);
}

TEST(VectorScheme, RejectsTwoAsPrime) {
  SeededRandom rng(38);
  EXPECT_THROW(BuildKeysForModulus(Modulus{2, 13, 26}, 2, std::nullopt, 1, rng), Error);
}

}  // namespace
}  // namespace intfhe

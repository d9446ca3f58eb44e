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

#ifndef INTFHE_ATTACKS_H_
#define INTFHE_ATTACKS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intfhe/dense.h"
#include "intfhe/numeric.h"
#include "intfhe/stats.h"
#include "intfhe/vector.h"

namespace intfhe {

struct AttackReport {
  std::string name;
  bool applicable = true;
  bool success = false;
  std::optional<Int> p;
  std::optional<Vec> gamma;
  std::vector<Int> plaintexts;
  std::uint64_t operations = 0;
  std::uint64_t budget = 0;
  std::string note;

  std::string ToJsonLine() const;
};

struct KnownPair {
  Vec c;
  Int m;
};

// Yields plaintext guesses in descending prior probability; empty when done.
using Guesser = std::function<std::optional<Int>()>;

// Guesses 0, 1, 2, ... up to (excluding) `limit`.
Guesser SequentialGuesser(Int limit);

// Guesses m for x_1 and tests gcd(x0, x_1 - m) for a factor under which every
// ciphertext reduces below M. x0 defaults to pq.
AttackReport BruteForceGcd(std::span<const Int> ciphertexts, const Int& pq, const Int& M,
                           const Guesser& next, std::uint64_t budget,
                           std::optional<Int> x0 = std::nullopt);

// Pairwise-difference product of HE1 ciphertexts against pq.
AttackReport CollisionAttack(std::span<const Int> ciphertexts, const Int& pq, const Int& M);

// Two HE2 ciphertexts with known plaintexts; `holdout` validates gamma.
AttackReport He2TwoPlaintextAttack(const KnownPair& first, const KnownPair& second, const Int& pq,
                                   std::span<const KnownPair> holdout = {});

// k HEk ciphertexts with known plaintexts. Declines with fewer than k pairs.
AttackReport HekKnownPlaintextAttack(std::span<const KnownPair> known, int k, const Int& pq,
                                     std::span<const KnownPair> holdout = {});

// p from k encryptions of zero: gcd(det Z, pq).
AttackReport ZeroDeterminantAttack(std::span<const Vec> zeros, const Int& pq);

// (c_i c_j) c_l - c_i (c_j c_l) over triples of the pool. The attack feeds
// associators and their products with pool entries to the determinant path.
Vec Associator(const Vec& a, const Vec& b, const Vec& c, const VectorPublicParams& pp);
AttackReport AssociatorAttack(std::span<const Vec> pool, const VectorPublicParams& pp,
                              std::uint64_t budget = 1u << 16);

// Factors pq given an oracle that returns c mod p.
AttackReport FactorViaDecryptionOracle(const std::function<Int(const Int&)>& oracle,
                                       const Int& pq, RandomSource& rng, int tries = 16);

struct UniformityReport {
  bool applicable = true;
  ChiSquareResult chi;
  std::uint64_t samples = 0;
  Int kappa;

  bool pass() const { return chi.pass; }
};

// Chi-square test of value mod kappa against uniform. Needs >= 50 kappa samples.
UniformityReport UniformityTest(std::span<const Int> values, const Int& kappa,
                                double significance = 0.001);

}  // namespace intfhe

#endif  // INTFHE_ATTACKS_H_

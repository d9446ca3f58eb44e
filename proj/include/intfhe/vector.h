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

#ifndef INTFHE_VECTOR_H_
#define INTFHE_VECTOR_H_

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "intfhe/dense.h"
#include "intfhe/numeric.h"
#include "intfhe/params.h"

namespace intfhe {

class RandomSource;

// Version tag written next to R in public-parameter files. Pairs (i, j),
// i < j, are enumerated (1,2),(1,3),...,(1,k),(2,3),... (1-based).
inline constexpr const char* kPairOrderTag = "pairs-lex-v1";

// binom(k+1, 2): length of an augmented k-vector.
int AugmentedSize(int k);

// 0-based (i, j), i < j, in augmentation order.
std::vector<std::pair<int, int>> PairOrder(int k);

// v followed by 2 v_i - v_j for each pair, reduced mod `mod`.
Vec Augment(std::span<const Int> v, const Int& mod);

// The binom(k+1,2) x k matrix U_k with Augment(v) = U_k v; entries 0, +-1, 2.
ModMatrix AugmentationMatrix(int k);

// Hidden constants tying R to the secret basis:
//   R (a*_i o a*_j) = rho_ij p 1 + sum_l sigma_ijl a_l  (mod pq), 1 <= i <= j < k.
// Indices below are 1-based to match the basis a_1..a_{k-1}.
struct StructureConstants {
  std::map<std::pair<int, int>, Int> rho;                 // residues mod q
  std::map<std::pair<int, int>, Vec> sigma;               // sigma[(i,j)][l-1] mod pq
  bool associativity_fix = false;
  Vec rho_single;                                         // rho_i mod q (fix only)
  Int tau;                                                // fix only
};

struct VectorSecretKey {
  int k = 2;
  Int p;
  Int q;
  std::optional<Int> kappa;
  Int M;
  bool signed_mode = false;
  std::vector<Vec> basis;  // basis[0] = 1, basis[1..k-1] = a_1..a_{k-1}
  Vec gamma;               // first row of A_k^-1 mod pq
  int lambda = 0;
  int eta = 0;
  bool insecure_toy = false;

  bool noisy() const { return kappa.has_value(); }
};

struct VectorPublicParams {
  int k = 2;
  Int pq;
  ModMatrix R;  // k x binom(k+1, 2)
  Int capacity;
  bool signed_mode = false;
  bool insecure_toy = false;
};

struct VectorCiphertext {
  Vec v;
  Int bound;

  bool operator==(const VectorCiphertext&) const = default;
};

struct VectorKeys {
  VectorSecretKey sk;
  StructureConstants hidden;
  VectorPublicParams pp;
  int attempts = 1;  // basis draws used, including the accepted one
};

struct BuildOptions {
  // Multiplicative structure on rho_ij with sigma solved against tau. Only
  // meaningful for k > 2; k = 2 is associative regardless.
  bool associativity_fix = true;
  // k = 2: use the closed-form alpha_1 / alpha_2 construction.
  bool closed_form_k2 = true;
  int max_attempts = 64;
  std::optional<Int> capacity;
  bool signed_mode = false;
};

VectorKeys BuildKeys(const ParameterSet& params, RandomSource& rng, BuildOptions options = {});

// Keys over a given modulus (toy primes, CRT shards). kappa present makes the
// key noisy.
VectorKeys BuildKeysForModulus(const Modulus& mod, int k, std::optional<Int> kappa, const Int& M,
                               RandomSource& rng, BuildOptions options = {});

// Keys from an explicit basis a_1..a_{k-1} and structure constants drawn from
// rng. Throws KeyGenerationFailure when the basis is inadmissible.
VectorKeys BuildKeysWithBasis(const Modulus& mod, std::span<const Vec> a, std::optional<Int> kappa,
                              const Int& M, RandomSource& rng, BuildOptions options = {});

// True when A_k or the squared augmented matrix is singular mod p or q (or,
// for k = 2, a_1, a_2 or a_1 - a_2 vanishes mod p or q).
bool BasisNeedsRegeneration(const Modulus& mod, std::span<const Vec> a);

// Columns a*_0..a*_{k-1} followed by a*_i o a*_j for 1 <= i <= j < k.
ModMatrix SquaredAugmentedBasis(std::span<const Vec> basis, const Int& pq);

// General solve of R [A*] = [A_k | C_k].
ModMatrix SolveReencryption(const Modulus& mod, std::span<const Vec> basis,
                            const StructureConstants& constants);

// k = 2 closed form: R = [[1-2a1, a1, a1], [-2a2, a2+1, a2]] with
// alpha_i = beta^-1 (sigma a_i + rho p - a_i^2), beta = 2 (a_2 - a_1)^2.
ModMatrix ClosedFormReencryption2(const Modulus& mod, const Vec& a, const Int& rho,
                                  const Int& sigma);

Int FreshBound(const VectorSecretKey& sk);

VectorCiphertext Encrypt(const Int& m, const VectorSecretKey& sk, const VectorPublicParams& pp,
                         RandomSource& rng);

// v = (m + r p + s kappa) 1 + sum_j t_j a_j mod pq; s ignored unless noisy.
VectorCiphertext EncryptWith(const Int& m, const Int& r, const Int& s, std::span<const Int> t,
                             const VectorSecretKey& sk, const VectorPublicParams& pp);

// Encrypts an arbitrary residue mod p without range or bound bookkeeping
// (bound is set to `bound`). Used for encrypted coefficients.
VectorCiphertext EncryptResidue(const Int& m, const Int& bound, const VectorSecretKey& sk,
                                const VectorPublicParams& pp, RandomSource& rng);

// gamma . c mod p (then mod kappa when noisy).
Int Decrypt(const VectorCiphertext& c, const VectorSecretKey& sk, bool force = false);
// gamma . c mod p with no kappa reduction and no bound check.
Int DecryptResidue(const VectorCiphertext& c, const VectorSecretKey& sk);

VectorCiphertext Add(const VectorCiphertext& a, const VectorCiphertext& b,
                     const VectorPublicParams& pp);
VectorCiphertext Sub(const VectorCiphertext& a, const VectorCiphertext& b,
                     const VectorPublicParams& pp);
VectorCiphertext Mult(const VectorCiphertext& a, const VectorCiphertext& b,
                      const VectorPublicParams& pp);

// R (a* o b*) mod pq without bound bookkeeping.
Vec MultRaw(std::span<const Int> a, std::span<const Int> b, const VectorPublicParams& pp);

VectorCiphertext EncodeConstant(const Int& value, const VectorPublicParams& pp);

struct VectorOps {
  using Ciphertext = VectorCiphertext;
  const VectorPublicParams& pp;

  Ciphertext Add(const Ciphertext& a, const Ciphertext& b) const { return intfhe::Add(a, b, pp); }
  Ciphertext Mult(const Ciphertext& a, const Ciphertext& b) const {
    return intfhe::Mult(a, b, pp);
  }
  Ciphertext Constant(const Int& v) const { return EncodeConstant(v, pp); }
};

}  // namespace intfhe

#endif  // INTFHE_VECTOR_H_

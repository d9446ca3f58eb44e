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

#include "intfhe/vector.h"

#include "intfhe/errors.h"
#include "intfhe/random.h"

namespace intfhe {
namespace {

std::vector<Vec> WithUnit(std::span<const Vec> a) {
  const std::size_t k = a.size() + 1;
  std::vector<Vec> basis;
  basis.reserve(k);
  basis.emplace_back(k, Int(1));
  for (const auto& v : a) {
    if (v.size() != k) throw InvalidArgument("basis vectors must have length k");
    basis.push_back(v);
  }
  return basis;
}

// Pairs (i, j) with 1 <= i <= j < k, the order used for the squared columns.
std::vector<std::pair<int, int>> SquarePairs(int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < k; ++i)
    for (int j = i; j < k; ++j) out.emplace_back(i, j);
  return out;
}

StructureConstants DrawConstants(const Modulus& mod, int k, bool fix, RandomSource& rng) {
  StructureConstants sc;
  const auto pairs = SquarePairs(k);
  if (!fix || k <= 2) {
    for (const auto& ij : pairs) {
      sc.rho[ij] = rng.Below(mod.q);
      Vec sigma(k - 1);
      for (auto& s : sigma) s = rng.Below(mod.pq);
      sc.sigma[ij] = std::move(sigma);
    }
    return sc;
  }
  sc.associativity_fix = true;
  sc.tau = rng.Below(mod.q);
  sc.rho_single.assign(k - 1, Int(0));
  // rho_1 must be invertible mod q to solve for sigma_ij1.
  do {
    sc.rho_single[0] = rng.Below(mod.q);
  } while (sc.rho_single[0] == 0);
  for (int i = 1; i < k - 1; ++i) sc.rho_single[i] = rng.Below(mod.q);
  const Int rho1_inv = *ModInverse(sc.rho_single[0], mod.q);
  for (const auto& [i, j] : pairs) {
    const Int& ri = sc.rho_single[i - 1];
    const Int& rj = sc.rho_single[j - 1];
    sc.rho[{i, j}] = Mod(ri * rj, mod.q);
    Vec sigma_q(k - 1);
    Int rest = 0;
    for (int l = 2; l < k; ++l) {
      sigma_q[l - 1] = rng.Below(mod.q);
      rest += sigma_q[l - 1] * sc.rho_single[l - 1];
    }
    sigma_q[0] = Mod(rho1_inv * (sc.tau * ri * rj - rest), mod.q);
    Vec sigma(k - 1);
    for (int l = 0; l < k - 1; ++l) {
      sigma[l] = CrtPair(rng.Below(mod.p), mod.p, sigma_q[l], mod.q);
    }
    sc.sigma[{i, j}] = std::move(sigma);
  }
  return sc;
}

Int CheckedBound(Int bound, const VectorPublicParams& pp) {
  if (bound >= pp.capacity) {
    throw OverflowRisk("plaintext bound " + ToString(bound) + " reached the capacity " +
                       ToString(pp.capacity));
  }
  return bound;
}

}  // namespace

int AugmentedSize(int k) { return k * (k + 1) / 2; }

std::vector<std::pair<int, int>> PairOrder(int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) out.emplace_back(i, j);
  return out;
}

Vec Augment(std::span<const Int> v, const Int& mod) {
  const int k = static_cast<int>(v.size());
  if (k < 2) throw InvalidArgument("Augment: k must be at least 2");
  Vec out;
  out.reserve(AugmentedSize(k));
  for (const auto& x : v) out.push_back(Mod(x, mod));
  for (const auto& [i, j] : PairOrder(k)) out.push_back(Mod(2 * v[i] - v[j], mod));
  return out;
}

ModMatrix AugmentationMatrix(int k) {
  ModMatrix u(AugmentedSize(k), k);
  for (int i = 0; i < k; ++i) u(i, i) = 1;
  int row = k;
  for (const auto& [i, j] : PairOrder(k)) {
    u(row, i) = 2;
    u(row, j) = -1;
    ++row;
  }
  return u;
}

ModMatrix SquaredAugmentedBasis(std::span<const Vec> basis, const Int& pq) {
  const int k = static_cast<int>(basis.size());
  std::vector<Vec> star;
  star.reserve(k);
  for (const auto& b : basis) star.push_back(Augment(b, pq));
  std::vector<Vec> columns(star.begin(), star.end());
  for (const auto& [i, j] : SquarePairs(k)) columns.push_back(Hadamard(star[i], star[j], pq));
  return ModMatrix::FromColumns(columns);
}

bool BasisNeedsRegeneration(const Modulus& mod, std::span<const Vec> a) {
  const auto basis = WithUnit(a);
  const int k = static_cast<int>(basis.size());
  if (k == 2) {
    const Int& a1 = a[0][0];
    const Int& a2 = a[0][1];
    for (const Int* prime : {&mod.p, &mod.q}) {
      if (Mod(a1, *prime) == 0 || Mod(a2, *prime) == 0 || Mod(a1 - a2, *prime) == 0) return true;
    }
  }
  const ModMatrix ak = ModMatrix::FromColumns(basis);
  if (!InverseModPrime(ak, mod.p) || !InverseModPrime(ak, mod.q)) return true;
  const ModMatrix squared = SquaredAugmentedBasis(basis, mod.pq);
  return !InverseModPrime(squared, mod.p) || !InverseModPrime(squared, mod.q);
}

ModMatrix SolveReencryption(const Modulus& mod, std::span<const Vec> basis,
                            const StructureConstants& constants) {
  const int k = static_cast<int>(basis.size());
  const ModMatrix squared = SquaredAugmentedBasis(basis, mod.pq);
  auto inverse = InverseModSemiprime(squared, mod.p, mod.q);
  if (!inverse) throw KeyGenerationFailure("squared augmented basis is singular");
  std::vector<Vec> target(basis.begin(), basis.end());
  for (const auto& ij : SquarePairs(k)) {
    Vec column(k, Mod(constants.rho.at(ij) * mod.p, mod.pq));
    const Vec& sigma = constants.sigma.at(ij);
    for (int l = 1; l < k; ++l) {
      column = AddVec(column, Scale(basis[l], sigma[l - 1], mod.pq), mod.pq);
    }
    target.push_back(std::move(column));
  }
  return Multiply(ModMatrix::FromColumns(target), *inverse, mod.pq);
}

ModMatrix ClosedFormReencryption2(const Modulus& mod, const Vec& a, const Int& rho,
                                  const Int& sigma) {
  const Int& pq = mod.pq;
  const Int diff = a[1] - a[0];
  auto beta_inv = ModInverse(2 * diff * diff, pq);
  if (!beta_inv) throw KeyGenerationFailure("beta = 2 (a2 - a1)^2 is not invertible mod pq");
  const Int alpha1 = Mod(*beta_inv * (sigma * a[0] + rho * mod.p - a[0] * a[0]), pq);
  const Int alpha2 = Mod(*beta_inv * (sigma * a[1] + rho * mod.p - a[1] * a[1]), pq);
  ModMatrix r(2, 3);
  r(0, 0) = Mod(1 - 2 * alpha1, pq);
  r(0, 1) = alpha1;
  r(0, 2) = alpha1;
  r(1, 0) = Mod(-2 * alpha2, pq);
  r(1, 1) = Mod(alpha2 + 1, pq);
  r(1, 2) = alpha2;
  return r;
}

VectorKeys BuildKeysWithBasis(const Modulus& mod, std::span<const Vec> a, std::optional<Int> kappa,
                              const Int& M, RandomSource& rng, BuildOptions options) {
  const int k = static_cast<int>(a.size()) + 1;
  if (k < 2) throw InvalidArgument("vector schemes need k >= 2");
  if (mod.p == 2 || mod.q == 2) throw InvalidArgument("vector schemes need odd primes");
  if (BasisNeedsRegeneration(mod, a)) throw KeyGenerationFailure("inadmissible basis");
  if (kappa && (*kappa < 1 || *kappa >= mod.p)) throw InvalidArgument("kappa must lie in [1, p)");

  VectorKeys keys;
  const auto basis = WithUnit(a);
  keys.hidden = DrawConstants(mod, k, options.associativity_fix, rng);
  if (k == 2 && options.closed_form_k2) {
    keys.pp.R = ClosedFormReencryption2(mod, a[0], keys.hidden.rho.at({1, 1}),
                                        keys.hidden.sigma.at({1, 1})[0]);
  } else {
    keys.pp.R = SolveReencryption(mod, basis, keys.hidden);
  }
  const auto a_inv = InverseModSemiprime(ModMatrix::FromColumns(basis), mod.p, mod.q);
  keys.sk.k = k;
  keys.sk.p = mod.p;
  keys.sk.q = mod.q;
  keys.sk.kappa = kappa;
  keys.sk.M = M;
  keys.sk.signed_mode = options.signed_mode;
  keys.sk.basis = basis;
  keys.sk.gamma = a_inv->Row(0);
  keys.sk.lambda = static_cast<int>(BitLength(mod.p));
  keys.sk.eta = static_cast<int>(BitLength(mod.q));
  keys.sk.insecure_toy = true;
  keys.pp.k = k;
  keys.pp.pq = mod.pq;
  keys.pp.capacity = options.capacity ? *options.capacity : Pow2(BitLength(mod.p) - 1);
  keys.pp.signed_mode = options.signed_mode;
  keys.pp.insecure_toy = true;
  return keys;
}

VectorKeys BuildKeysForModulus(const Modulus& mod, int k, std::optional<Int> kappa, const Int& M,
                               RandomSource& rng, BuildOptions options) {
  if (k < 2) throw InvalidArgument("vector schemes need k >= 2");
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    std::vector<Vec> a(k - 1, Vec(k));
    for (auto& v : a)
      for (auto& x : v) x = rng.Range(1, mod.pq);
    if (BasisNeedsRegeneration(mod, a)) continue;
    VectorKeys keys = BuildKeysWithBasis(mod, a, kappa, M, rng, options);
    keys.attempts = attempt;
    return keys;
  }
  throw KeyGenerationFailure("no admissible basis after " + std::to_string(options.max_attempts) +
                             " attempts; primes are implausibly small");
}

VectorKeys BuildKeys(const ParameterSet& params, RandomSource& rng, BuildOptions options) {
  if (!IsVector(params.scheme)) throw InvalidArgument("BuildKeys: not a vector scheme");
  Validate(params);
  const Modulus mod = GenerateModulus(params.lambda, params.eta, rng);
  std::optional<Int> kappa;
  if (IsNoisy(params.scheme)) kappa = Pow2(params.kappa_bits - 1) + rng.Bits(params.kappa_bits - 1);
  if (!options.capacity) options.capacity = BoundCapacity(params);
  VectorKeys keys = BuildKeysForModulus(mod, params.k, kappa, params.M, rng, options);
  keys.sk.lambda = params.lambda;
  keys.sk.eta = params.eta;
  keys.sk.insecure_toy = params.insecure_toy;
  keys.pp.insecure_toy = params.insecure_toy;
  return keys;
}

Int FreshBound(const VectorSecretKey& sk) {
  Int bound = sk.M;
  if (sk.kappa) bound += *sk.kappa * *sk.kappa;
  if (sk.signed_mode) bound *= 2;
  return bound;
}

VectorCiphertext Encrypt(const Int& m, const VectorSecretKey& sk, const VectorPublicParams& pp,
                         RandomSource& rng) {
  const Int r = rng.Below(sk.q);
  const Int s = sk.kappa ? rng.Below(*sk.kappa) : Int(0);
  Vec t(sk.k - 1);
  for (auto& x : t) x = rng.Below(pp.pq);
  return EncryptWith(m, r, s, t, sk, pp);
}

VectorCiphertext EncryptWith(const Int& m, const Int& r, const Int& s, std::span<const Int> t,
                             const VectorSecretKey& sk, const VectorPublicParams& pp) {
  const bool ok = sk.signed_mode ? (m > -sk.M && m < sk.M) : (m >= 0 && m < sk.M);
  if (!ok) throw InvalidArgument("plaintext " + ToString(m) + " outside the admissible range");
  if (static_cast<int>(t.size()) != sk.k - 1) throw InvalidArgument("need k-1 basis multipliers");
  Int head = m + r * sk.p;
  if (sk.kappa) head += s * *sk.kappa;
  Vec v(sk.k, head);
  for (int j = 1; j < sk.k; ++j) {
    for (int i = 0; i < sk.k; ++i) v[i] += t[j - 1] * sk.basis[j][i];
  }
  return VectorCiphertext{Reduce(v, pp.pq), FreshBound(sk)};
}

VectorCiphertext EncryptResidue(const Int& m, const Int& bound, const VectorSecretKey& sk,
                                const VectorPublicParams& pp, RandomSource& rng) {
  const Int head = Mod(m, sk.p) + rng.Below(sk.q) * sk.p;
  Vec v(sk.k, head);
  for (int j = 1; j < sk.k; ++j) {
    const Int t = rng.Below(pp.pq);
    for (int i = 0; i < sk.k; ++i) v[i] += t * sk.basis[j][i];
  }
  return VectorCiphertext{Reduce(v, pp.pq), bound};
}

Int DecryptResidue(const VectorCiphertext& c, const VectorSecretKey& sk) {
  return Mod(Dot(sk.gamma, c.v, sk.p * sk.q), sk.p);
}

Int Decrypt(const VectorCiphertext& c, const VectorSecretKey& sk, bool force) {
  if (c.bound >= sk.p && !force) {
    throw OverflowRisk("ciphertext bound " + ToString(c.bound) +
                       " is not below p; decryption is unreliable");
  }
  Int m = DecryptResidue(c, sk);
  if (sk.signed_mode) m = CenteredMod(m, sk.p);
  if (sk.kappa) m = sk.signed_mode ? CenteredMod(m, *sk.kappa) : Mod(m, *sk.kappa);
  return m;
}

VectorCiphertext Add(const VectorCiphertext& a, const VectorCiphertext& b,
                     const VectorPublicParams& pp) {
  return VectorCiphertext{AddVec(a.v, b.v, pp.pq), CheckedBound(a.bound + b.bound, pp)};
}

VectorCiphertext Sub(const VectorCiphertext& a, const VectorCiphertext& b,
                     const VectorPublicParams& pp) {
  return VectorCiphertext{SubVec(a.v, b.v, pp.pq), CheckedBound(a.bound + b.bound, pp)};
}

Vec MultRaw(std::span<const Int> a, std::span<const Int> b, const VectorPublicParams& pp) {
  return Multiply(pp.R, Hadamard(Augment(a, pp.pq), Augment(b, pp.pq), pp.pq), pp.pq);
}

VectorCiphertext Mult(const VectorCiphertext& a, const VectorCiphertext& b,
                      const VectorPublicParams& pp) {
  Int bound = CheckedBound(a.bound * b.bound, pp);
  return VectorCiphertext{MultRaw(a.v, b.v, pp), std::move(bound)};
}

VectorCiphertext EncodeConstant(const Int& value, const VectorPublicParams& pp) {
  if (value < 0 && !pp.signed_mode) throw InvalidArgument("negative constant requires signed mode");
  Int bound = abs(value);
  if (pp.signed_mode) bound *= 2;
  return VectorCiphertext{Vec(pp.k, Mod(value, pp.pq)), CheckedBound(bound, pp)};
}

}  // namespace intfhe

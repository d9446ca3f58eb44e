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

#ifndef INTFHE_PARAMS_H_
#define INTFHE_PARAMS_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "intfhe/numeric.h"

namespace intfhe {

enum class Scheme { kHE1, kHE1N, kHE2, kHE2N, kHEk, kHEkN, kHE2NCRT };

bool IsNoisy(Scheme scheme);
bool IsVector(Scheme scheme);
std::string SchemeName(Scheme scheme, int k = 0);

// Accepts he1, he1n, he2, he2n, hek, hekn, he2ncrt and the shorthands heK /
// heKn for a concrete dimension (he3, he4n, ...). Case-insensitive.
struct SchemeSpec {
  Scheme scheme;
  int k;
};
SchemeSpec ParseScheme(std::string_view text);

// Sizes for one scheme instance. lambda and eta are the bit lengths of p and
// q; kappa_bits is the bit length of the noise modulus for noisy schemes.
struct ParameterSet {
  Scheme scheme = Scheme::kHE1;
  int d = 1;
  int n_bits = 0;
  Int n = 1;  // input count bound, 2^n_bits for derived sets
  Int M = 2;  // exclusive plaintext bound, 2^rho for derived sets
  int rho = 1;
  int rho_prime = 0;
  int lambda = 0;
  int eta = 0;
  int kappa_bits = 0;
  int k = 1;
  int K = 1;
  bool insecure_toy = false;

  int EffectiveRho() const { return IsNoisy(scheme) ? rho_prime : rho; }
};

// Derivation with M = 2^rho and n = 2^n_bits.
//   plain: lambda = ceil(3 d rho / 2), eta = ceil(lambda^2 / rho) - lambda
//   noisy: kappa_bits = d (n_bits + rho), rho' = rho + kappa_bits,
//          lambda = d (n_bits + 2 kappa_bits), eta = ceil(lambda^2 / rho') - lambda
// lambda is raised where needed so that the capacity and brute-force margins
// hold (see Violations). k defaults from the scheme; K applies to CRT only.
ParameterSet DeriveParams(Scheme scheme, int d, int n_bits, int rho, int k = 0,
                          int K = 1);

// Noisy schemes sized from a target effective entropy rho':
// kappa_bits = ceil(d (n_bits + rho') / (d + 1)), rho = rho' - kappa_bits.
ParameterSet DeriveParamsEffective(Scheme scheme, int d, int n_bits,
                                   int rho_prime, int k = 0, int K = 1);

// Human-readable invariant violations; empty when the set is well formed.
std::vector<std::string> Violations(const ParameterSet& params);
void Validate(const ParameterSet& params);

// Largest plaintext bound the evaluator may accumulate: 2^(lambda-1) <= p.
Int BoundCapacity(const ParameterSet& params);
// Largest plain-value bound recoverable after the kappa reduction.
Int KappaCapacity(const ParameterSet& params);

int CeilLog2(const Int& x);

struct Preset {
  std::string name;
  ParameterSet params;
};

// One preset per line: `name scheme d n_bits rho [k] [K]`; '#' comments.
std::vector<Preset> ParsePresets(std::istream& in);

std::string Describe(const ParameterSet& params);

}  // namespace intfhe

#endif  // INTFHE_PARAMS_H_

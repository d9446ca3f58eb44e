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

#include "intfhe/attacks.h"

#include <json.hpp>

#include "intfhe/errors.h"
#include "intfhe/random.h"

namespace intfhe {
namespace {

bool AllBelow(std::span<const Int> cs, const Int& g, const Int& M) {
  for (const auto& c : cs)
    if (Mod(c, g) >= M) return false;
  return true;
}

bool Nontrivial(const Int& g, const Int& pq) { return g > 1 && g < pq; }

// Solve gamma . c_i = m_i (mod p) on the first k pairs, then check holdout.
std::optional<Vec> RecoverGamma(std::span<const KnownPair> known, int k, const Int& p,
                                std::span<const KnownPair> holdout) {
  ModMatrix rows(k, k);
  Vec rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) rows(i, j) = known[i].c[j];
    rhs[i] = known[i].m;
  }
  auto gamma = SolveModPrime(rows, rhs, p);
  if (!gamma) return std::nullopt;
  for (const auto& h : holdout) {
    if (Mod(Dot(*gamma, h.c, p), p) != Mod(h.m, p)) return std::nullopt;
  }
  return gamma;
}

AttackReport FinishWithGamma(AttackReport report, const Int& g, std::span<const KnownPair> known,
                             int k, const Int& pq, std::span<const KnownPair> holdout) {
  for (const Int& candidate : {g, Int(pq / g)}) {
    if (!IsProbablePrime(candidate)) continue;
    if (auto gamma = RecoverGamma(known, k, candidate, holdout)) {
      report.success = true;
      report.p = candidate;
      report.gamma = std::move(gamma);
      return report;
    }
  }
  report.note = "factor found but no decryption vector verified";
  return report;
}

}  // namespace

std::string AttackReport::ToJsonLine() const {
  nlohmann::json j;
  j["attack"] = name;
  j["applicable"] = applicable;
  j["success"] = success;
  j["p"] = p ? nlohmann::json(ToString(*p)) : nlohmann::json(nullptr);
  if (gamma) {
    std::vector<std::string> g;
    for (const auto& x : *gamma) g.push_back(ToString(x));
    j["gamma"] = g;
  }
  if (!plaintexts.empty()) {
    std::vector<std::string> m;
    for (const auto& x : plaintexts) m.push_back(ToString(x));
    j["plaintexts"] = m;
  }
  j["operations"] = operations;
  j["budget"] = budget;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

Guesser SequentialGuesser(Int limit) {
  return [next = Int(0), limit]() mutable -> std::optional<Int> {
    if (next >= limit) return std::nullopt;
    return next++;
  };
}

AttackReport BruteForceGcd(std::span<const Int> ciphertexts, const Int& pq, const Int& M,
                           const Guesser& next, std::uint64_t budget, std::optional<Int> x0) {
  AttackReport report;
  report.name = "brute-force-gcd";
  report.budget = budget;
  if (ciphertexts.empty()) {
    report.applicable = false;
    report.note = "no ciphertexts";
    return report;
  }
  const Int base = x0 ? *x0 : pq;
  while (report.operations < budget) {
    auto guess = next();
    if (!guess) break;
    ++report.operations;
    Int g = Gcd(base, ciphertexts[0] - *guess);
    if (x0) g = Gcd(g, pq);
    if (!Nontrivial(g, pq) || !AllBelow(ciphertexts, g, M)) continue;
    report.success = true;
    report.p = g;
    for (const auto& c : ciphertexts) report.plaintexts.push_back(Mod(c, g));
    return report;
  }
  report.note = report.operations >= budget ? "budget exhausted" : "guesses exhausted";
  return report;
}

AttackReport CollisionAttack(std::span<const Int> ciphertexts, const Int& pq, const Int& M) {
  AttackReport report;
  report.name = "collision";
  const std::size_t n = ciphertexts.size();
  if (n < 2) {
    report.applicable = false;
    report.note = "needs at least two ciphertexts";
    return report;
  }
  auto accept = [&](const Int& g) {
    for (const Int& candidate : {g, Int(pq / g)}) {
      if (AllBelow(ciphertexts, candidate, M)) {
        report.success = true;
        report.p = candidate;
        for (const auto& c : ciphertexts) report.plaintexts.push_back(Mod(c, candidate));
        return true;
      }
    }
    return false;
  };
  Int product = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      product = Mod(product * (ciphertexts[j] - ciphertexts[i]), pq);
      ++report.operations;
    }
  const Int g = Gcd(product, pq);
  if (Nontrivial(g, pq) && accept(g)) return report;
  if (g == pq) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        ++report.operations;
        const Int h = Gcd(ciphertexts[j] - ciphertexts[i], pq);
        if (Nontrivial(h, pq) && accept(h)) return report;
      }
  }
  report.note = "no plaintext collision exposed a factor";
  return report;
}

AttackReport He2TwoPlaintextAttack(const KnownPair& first, const KnownPair& second, const Int& pq,
                                   std::span<const KnownPair> holdout) {
  AttackReport report;
  report.name = "he2-two-plaintext";
  if (first.c.size() != 2 || second.c.size() != 2) {
    report.applicable = false;
    report.note = "HE2 ciphertexts are 2-vectors";
    return report;
  }
  const Vec& c = first.c;
  const Vec& d = second.c;
  const Int nu = Mod((c[0] - first.m) * (d[1] - second.m) - (c[1] - first.m) * (d[0] - second.m), pq);
  report.operations = 1;
  const Int g = Gcd(nu, pq);
  if (!Nontrivial(g, pq)) {
    report.note = nu == 0 ? "degenerate pair (rs' = r's); retry with fresh ciphertexts"
                          : "gcd is trivial";
    return report;
  }
  const KnownPair known[2] = {first, second};
  return FinishWithGamma(std::move(report), g, known, 2, pq, holdout);
}

AttackReport HekKnownPlaintextAttack(std::span<const KnownPair> known, int k, const Int& pq,
                                     std::span<const KnownPair> holdout) {
  AttackReport report;
  report.name = "hek-known-plaintext";
  if (k < 2 || static_cast<int>(known.size()) < k) {
    report.applicable = false;
    report.note = "needs k known plaintexts";
    return report;
  }
  std::vector<Vec> columns;
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(known[i].c.size()) != k) throw InvalidArgument("ciphertext length != k");
    Vec col(known[i].c);
    for (auto& x : col) x -= known[i].m;
    columns.push_back(std::move(col));
  }
  const Int det = Mod(Determinant(ModMatrix::FromColumns(columns)), pq);
  report.operations = 1;
  const Int g = Gcd(det, pq);
  if (!Nontrivial(g, pq)) {
    report.note = det == 0 ? "singular difference matrix; degenerate draw" : "gcd is trivial";
    return report;
  }
  return FinishWithGamma(std::move(report), g, known, k, pq, holdout);
}

AttackReport ZeroDeterminantAttack(std::span<const Vec> zeros, const Int& pq) {
  AttackReport report;
  report.name = "zero-determinant";
  const std::size_t k = zeros.empty() ? 0 : zeros[0].size();
  if (k < 2 || zeros.size() < k) {
    report.applicable = false;
    report.note = "needs k encryptions of zero";
    return report;
  }
  const Int det = Mod(Determinant(ModMatrix::FromColumns(zeros.first(k))), pq);
  report.operations = 1;
  const Int g = Gcd(det, pq);
  if (Nontrivial(g, pq)) {
    report.success = true;
    report.p = g;
  } else {
    report.note = det == 0 ? "zero encryptions are linearly dependent mod pq" : "gcd is trivial";
  }
  return report;
}

Vec Associator(const Vec& a, const Vec& b, const Vec& c, const VectorPublicParams& pp) {
  const Vec left = MultRaw(MultRaw(a, b, pp), c, pp);
  const Vec right = MultRaw(a, MultRaw(b, c, pp), pp);
  return SubVec(left, right, pp.pq);
}

AttackReport AssociatorAttack(std::span<const Vec> pool, const VectorPublicParams& pp,
                              std::uint64_t budget) {
  AttackReport report;
  report.name = "associator";
  report.budget = budget;
  if (pp.k <= 2) {
    report.applicable = false;
    report.note = "multiplication is associative for k <= 2";
    return report;
  }
  std::vector<Vec> zeros;
  const std::size_t n = pool.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        if (report.operations >= budget) {
          report.note = "budget exhausted";
          return report;
        }
        ++report.operations;
        Vec z = Associator(pool[i], pool[j], pool[l], pp);
        if (std::all_of(z.begin(), z.end(), [](const Int& x) { return x == 0; })) continue;
        // Associators of a commutative algebra span few directions (two at
        // k = 3), so also take z * c: still a zero encryption mod p.
        Vec zc = MultRaw(z, pool[i], pp);
        zeros.push_back(std::move(z));
        zeros.push_back(std::move(zc));
        if (static_cast<int>(zeros.size()) < pp.k) continue;
        for (int shift = 0; shift < 2; ++shift) {
          if (zeros.size() < static_cast<std::size_t>(pp.k + shift)) break;
          std::span<const Vec> last(zeros.data() + zeros.size() - pp.k - shift, pp.k);
          const Int g = Gcd(Mod(Determinant(ModMatrix::FromColumns(last)), pp.pq), pp.pq);
          if (Nontrivial(g, pp.pq)) {
            report.success = true;
            report.p = g;
            return report;
          }
        }
      }
  report.note = zeros.size() < static_cast<std::size_t>(pp.k)
                    ? "too few nonzero associators"
                    : "associators exposed no factor of pq";
  return report;
}

AttackReport FactorViaDecryptionOracle(const std::function<Int(const Int&)>& oracle, const Int& pq,
                                       RandomSource& rng, int tries) {
  AttackReport report;
  report.name = "decryption-oracle-factoring";
  report.budget = static_cast<std::uint64_t>(tries);
  for (int t = 0; t < tries; ++t) {
    ++report.operations;
    const Int c = rng.Range(1, pq);
    const Int g = Gcd(c - oracle(c), pq);
    if (Nontrivial(g, pq)) {
      report.success = true;
      report.p = g;
      return report;
    }
  }
  report.note = "oracle answers never exposed a factor";
  return report;
}

UniformityReport UniformityTest(std::span<const Int> values, const Int& kappa,
                                double significance) {
  if (kappa < 1) throw InvalidArgument("kappa must be positive");
  UniformityReport report;
  report.kappa = kappa;
  report.samples = values.size();
  if (kappa == 1) {
    report.applicable = false;
    return report;
  }
  if (kappa > Int(1) << 24) throw InvalidArgument("kappa too large for a chi-square table");
  const std::uint64_t bins = kappa.get_ui();
  if (values.size() < 50 * bins) {
    throw InvalidArgument("uniformity test needs at least 50 kappa samples, got " +
                          std::to_string(values.size()));
  }
  std::vector<std::uint64_t> counts(bins, 0);
  for (const auto& v : values) ++counts[Mod(v, kappa).get_ui()];
  report.chi = ChiSquareUniform(counts, significance);
  return report;
}

}  // namespace intfhe

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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "intfhe/attacks.h"
#include "intfhe/boolean.h"
#include "intfhe/circuit.h"
#include "intfhe/crt.h"
#include "intfhe/errors.h"
#include "intfhe/params.h"
#include "intfhe/pipeline.h"
#include "intfhe/random.h"
#include "intfhe/scalar.h"
#include "intfhe/vector.h"

namespace intfhe {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome Check(bool ok, std::string detail) { return {ok, std::move(detail)}; }

std::string Fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---- independent plaintext oracles ----

Int PlainEval(const ArithCircuit& c, const std::vector<Int>& in) {
  std::vector<Int> w(c.nodes.size());
  for (std::size_t i = 0; i < c.inputs.size(); ++i) w[c.inputs[i]] = in[i];
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    if (n.kind == NodeKind::kConstant) w[i] = n.constant;
    if (n.kind == NodeKind::kAdd) w[i] = w[n.lhs] + w[n.rhs];
    if (n.kind == NodeKind::kMul) w[i] = w[n.lhs] * w[n.rhs];
  }
  return w[c.outputs.front()];
}

ArithCircuit RandomCircuit(int max_degree, SeededRandom& rng) {
  CircuitBuilder b;
  std::vector<int> nodes, deg;
  const int inputs = 2 + static_cast<int>(rng.Below(std::uint64_t{5}));
  for (int i = 0; i < inputs; ++i) {
    nodes.push_back(b.Input("x" + std::to_string(i)));
    deg.push_back(1);
  }
  const int gates = 1 + static_cast<int>(rng.Below(std::uint64_t{12}));
  for (int g = 0; g < gates; ++g) {
    int lhs = static_cast<int>(rng.Below(std::uint64_t(nodes.size())));
    int rhs;
    int rdeg;
    if (rng.Below(std::uint64_t{6}) == 0) {
      rhs = b.Constant(Int(1 + rng.Below(std::uint64_t{3})));
      rdeg = 0;
    } else {
      const int pick = static_cast<int>(rng.Below(std::uint64_t(nodes.size())));
      rhs = nodes[pick];
      rdeg = deg[pick];
    }
    const int ldeg = deg[lhs];
    lhs = nodes[lhs];
    if (rng.Below(std::uint64_t{2}) == 0 && ldeg + rdeg <= max_degree) {
      nodes.push_back(b.Mul(lhs, rhs));
      deg.push_back(ldeg + rdeg);
    } else {
      nodes.push_back(b.Add(lhs, rhs));
      deg.push_back(std::max(ldeg, rdeg));
    }
  }
  b.Output(nodes.back());
  return std::move(b).Build();
}

// ---- criterion 1 ----

Outcome ParameterReproduction() {
  const auto a = DeriveParams(Scheme::kHE1, 4, 16, 32);
  const auto b = DeriveParams(Scheme::kHE1N, 3, 16, 8);
  const auto c = DeriveParams(Scheme::kHE1N, 3, 16, 1);
  const bool ok = a.lambda == 192 && a.eta == 960 && b.kappa_bits == 72 && b.rho_prime == 80 &&
                  b.lambda == 480 && b.eta == 2400 && c.kappa_bits == 51 && c.rho_prime == 52 &&
                  c.lambda == 354 && c.eta >= 2055 && c.eta <= 2057;
  return Check(ok, Fmt("HE1 %d/%d; HE1N %d/%d/%d/%d; HE1N rho=1 %d/%d/%d/%d", a.lambda, a.eta,
                       b.kappa_bits, b.rho_prime, b.lambda, b.eta, c.kappa_bits, c.rho_prime,
                       c.lambda, c.eta));
}

// ---- criterion 2 ----

struct SuiteCase {
  std::string label;
  SchemeSpec spec;
  int K = 1;
};

template <typename Ct>
struct Backend {
  std::function<Ct(const Int&)> encrypt;
  std::function<Int(const Ct&)> decrypt;
  std::function<std::vector<Ct>(const ArithCircuit&, const std::vector<Ct>&)> eval;
};

template <typename Ct>
bool RunSuite(const Backend<Ct>& be, const ParameterSet& ps, std::optional<Int> kappa,
              SeededRandom& rng, std::string& why) {
  for (int t = 0; t < 1000; ++t) {
    const Int m = rng.Below(ps.M);
    if (be.decrypt(be.encrypt(m)) != m) {
      why = "round-trip mismatch";
      return false;
    }
  }
  const CapacityLimits limits = LimitsFor(ps);
  int accepted = 0;
  for (int attempt = 0; accepted < 200; ++attempt) {
    if (attempt > 20000) {
      why = "too few circuits passed the capacity check";
      return false;
    }
    const auto circuit = RandomCircuit(ps.d, rng);
    if (!CheckCapacity(circuit, limits).ok) continue;
    ++accepted;
    std::vector<Int> plain;
    std::vector<Ct> cts;
    for (std::size_t i = 0; i < circuit.inputs.size(); ++i) {
      plain.push_back(rng.Below(ps.M));
      cts.push_back(be.encrypt(plain.back()));
    }
    Int expect = PlainEval(circuit, plain);
    if (kappa) expect = Mod(expect, *kappa);
    if (be.decrypt(be.eval(circuit, cts).front()) != expect) {
      why = "circuit mismatch:\n" + FormatCircuit(circuit);
      return false;
    }
  }
  return true;
}

ParameterSet SuiteParams(const SuiteCase& sc, int d, int rho) {
  if (!IsNoisy(sc.spec.scheme)) return DeriveParams(sc.spec.scheme, d, 4, rho, sc.spec.k);
  for (int n_bits = 4; n_bits >= 0; --n_bits) {
    try {
      return DeriveParamsEffective(sc.spec.scheme, d, n_bits, rho, sc.spec.k, sc.K);
    } catch (const InvalidArgument&) {
    }
  }
  throw InvalidArgument("no admissible n_bits");
}

Outcome HomomorphismSuites() {
  std::vector<SuiteCase> cases{{"HE1", ParseScheme("he1")},   {"HE1N", ParseScheme("he1n")},
                               {"HE2", ParseScheme("he2")},   {"HE2N", ParseScheme("he2n")},
                               {"HE3", ParseScheme("he3")},   {"HE4", ParseScheme("he4")},
                               {"HE3N", ParseScheme("he3n")}};
  for (int K = 1; K <= 3; ++K) cases.push_back({"HE2NCRT(K=" + std::to_string(K) + ")", ParseScheme("he2ncrt"), K});
  int configs = 0, max_lambda = 0;
  SeededRandom rng(2001);
  for (const auto& sc : cases)
    for (int d : {2, 3, 4})
      for (int rho : {8, 16, 32}) {
        const ParameterSet ps = SuiteParams(sc, d, rho);
        max_lambda = std::max(max_lambda, ps.lambda);
        std::string why;
        bool ok = false;
        if (ps.scheme == Scheme::kHE2NCRT) {
          auto keys = CrtKeygen(ps, rng);
          Backend<CrtCiphertext> be{
              [&](const Int& m) { return CrtEncrypt(m, keys.sk, keys.pp, rng); },
              [&](const CrtCiphertext& c) { return CrtDecrypt(c, keys.sk); },
              [&](const ArithCircuit& c, const std::vector<CrtCiphertext>& in) {
                return Evaluate<CrtOps>(c, in, CrtOps{keys.pp});
              }};
          ok = RunSuite(be, ps, keys.sk.kappa, rng, why);
        } else if (IsVector(ps.scheme)) {
          auto keys = BuildKeys(ps, rng);
          Backend<VectorCiphertext> be{
              [&](const Int& m) { return Encrypt(m, keys.sk, keys.pp, rng); },
              [&](const VectorCiphertext& c) { return Decrypt(c, keys.sk); },
              [&](const ArithCircuit& c, const std::vector<VectorCiphertext>& in) {
                return Evaluate<VectorOps>(c, in, VectorOps{keys.pp});
              }};
          ok = RunSuite(be, ps, keys.sk.kappa, rng, why);
        } else {
          auto keys = ScalarKeygen(ps, rng);
          Backend<ScalarCiphertext> be{
              [&](const Int& m) { return Encrypt(m, keys.sk, keys.pp, rng); },
              [&](const ScalarCiphertext& c) { return Decrypt(c, keys.sk); },
              [&](const ArithCircuit& c, const std::vector<ScalarCiphertext>& in) {
                return Evaluate<ScalarOps>(c, in, ScalarOps{keys.pp});
              }};
          ok = RunSuite(be, ps, keys.sk.kappa, rng, why);
        }
        if (!ok) return Check(false, sc.label + Fmt(" d=%d rho=%d: ", d, rho) + why);
        ++configs;
      }
  return Check(max_lambda <= 512,
               Fmt("%d scheme/d/rho configs, 1000 round-trips + 200 circuits each, max lambda %d",
                   configs, max_lambda));
}

// ---- criterion 3 ----

Outcome MatrixIdentities() {
  SeededRandom rng(3001);
  int checked = 0;
  for (int k = 2; k <= 6; ++k)
    for (int draw = 0; draw < 50; ++draw) {
      const Modulus mod = GenerateModulus(48, 64, rng);
      const auto keys = BuildKeysForModulus(mod, k, std::nullopt, 16, rng,
                                            {.associativity_fix = draw % 2 == 0});
      const auto& R = keys.pp.R;
      const Int& pq = mod.pq;
      if (Multiply(R, AugmentationMatrix(k), pq) != ModMatrix::Identity(k)) {
        return Check(false, Fmt("R U_k != I_k at k=%d", k));
      }
      const auto& basis = keys.sk.basis;
      std::vector<Vec> star;
      for (const auto& b : basis) star.push_back(Augment(b, pq));
      for (int j = 0; j < k; ++j)
        if (Multiply(R, star[j], pq) != Reduce(basis[j], pq)) {
          return Check(false, Fmt("R a*_%d != a_%d at k=%d", j, j, k));
        }
      for (int i = 1; i < k; ++i)
        for (int j = i; j < k; ++j) {
          Vec rhs(k, Int(keys.hidden.rho.at({i, j}) * mod.p));
          for (int l = 1; l < k; ++l) {
            const Int& s = keys.hidden.sigma.at({i, j})[l - 1];
            for (int r = 0; r < k; ++r) rhs[r] += s * basis[l][r];
          }
          if (Multiply(R, Hadamard(star[i], star[j], pq), pq) != Reduce(rhs, pq)) {
            return Check(false, Fmt("product relation fails at k=%d (%d,%d)", k, i, j));
          }
        }
      ++checked;
    }
  return Check(true, Fmt("%d key generations, k=2..6", checked));
}

// ---- criterion 4 ----

Outcome AssociativityFix() {
  SeededRandom rng(4001);
  int triples = 0;
  for (int k = 3; k <= 5; ++k)
    for (int draw = 0; draw < 10; ++draw) {
      const auto keys = BuildKeysForModulus(GenerateModulus(64, 96, rng), k, std::nullopt, 256, rng);
      for (int t = 0; t < 50; ++t) {
        const auto c1 = Encrypt(rng.Below(Int(256)), keys.sk, keys.pp, rng);
        const auto c2 = Encrypt(rng.Below(Int(256)), keys.sk, keys.pp, rng);
        const auto c3 = Encrypt(rng.Below(Int(256)), keys.sk, keys.pp, rng);
        const auto left = Mult(Mult(c1, c2, keys.pp), c3, keys.pp);
        const auto right = Mult(c1, Mult(c2, c3, keys.pp), keys.pp);
        if (Dot(keys.sk.gamma, left.v, keys.pp.pq) != Dot(keys.sk.gamma, right.v, keys.pp.pq)) {
          return Check(false, Fmt("decryption-level associativity fails at k=%d", k));
        }
        ++triples;
      }
    }
  int recovered = 0;
  for (int draw = 0; draw < 50; ++draw) {
    const auto keys = BuildKeysForModulus(GenerateModulus(32, 64, rng), 3, std::nullopt, 16, rng,
                                          {.associativity_fix = false});
    std::vector<Vec> pool;
    for (int i = 0; i < 4; ++i) pool.push_back(Encrypt(rng.Below(Int(16)), keys.sk, keys.pp, rng).v);
    const auto r = AssociatorAttack(pool, keys.pp);
    if (r.success && *r.p == keys.sk.p) ++recovered;
  }
  return Check(recovered >= 1, Fmt("%d fixed triples hold; unfixed k=3 attack recovered p on %d/50",
                                   triples, recovered));
}

// ---- criterion 5 ----

bool GammaVerifies(const Vec& gamma, const VectorKeys& keys, SeededRandom& rng) {
  for (int t = 0; t < 10; ++t) {
    const Int m = rng.Below(keys.sk.M);
    if (Dot(gamma, Encrypt(m, keys.sk, keys.pp, rng).v, keys.sk.p) != m) return false;
  }
  return true;
}

Outcome AttackValidation() {
  SeededRandom rng(5001);
  const Int M = Pow2(16);
  auto pairs = [&](const VectorKeys& keys, int n) {
    std::vector<KnownPair> out;
    for (int i = 0; i < n; ++i) {
      const Int m = rng.Below(M);
      out.push_back({Encrypt(m, keys.sk, keys.pp, rng).v, m});
    }
    return out;
  };
  std::map<int, int> known_wins;
  for (int k = 2; k <= 4; ++k)
    for (int t = 0; t < 100; ++t) {
      const auto keys = BuildKeysForModulus(GenerateModulus(32, 64, rng), k, std::nullopt, M, rng);
      const auto kp = pairs(keys, k + 3);
      const auto r = k == 2 ? He2TwoPlaintextAttack(kp[0], kp[1], keys.pp.pq, std::span(kp).subspan(2))
                            : HekKnownPlaintextAttack(std::span(kp).first(k), k, keys.pp.pq,
                                                      std::span(kp).subspan(k));
      if (r.success && *r.p == keys.sk.p && r.gamma && GammaVerifies(*r.gamma, keys, rng)) {
        ++known_wins[k];
      }
    }
  int collisions = 0;
  for (int t = 0; t < 100; ++t) {
    const Modulus mod = GenerateModulus(32, 64, rng);
    const auto keys = ScalarKeysFromPrimes(mod.p, mod.q, std::nullopt, M);
    std::vector<Int> plain, cts;
    for (int i = 0; i < 8; ++i) plain.push_back(rng.Below(M));
    plain.push_back(plain[rng.Below(std::uint64_t{8})]);  // planted
    for (const auto& m : plain) cts.push_back(Encrypt(m, keys.sk, keys.pp, rng).value);
    const auto r = CollisionAttack(cts, keys.pp.pq, M);
    if (r.success && *r.p == keys.sk.p && r.plaintexts == plain) ++collisions;
  }
  int brute_failures = 0;
  for (int t = 0; t < 20; ++t) {
    const Modulus mod = GenerateModulus(32, 64, rng);
    const auto keys = ScalarKeysFromPrimes(mod.p, mod.q, std::nullopt, M);
    std::vector<Int> cts;
    for (int i = 0; i < 4; ++i) cts.push_back(Encrypt(rng.Below(M), keys.sk, keys.pp, rng).value);
    const auto r = BruteForceGcd(cts, keys.pp.pq, M, SequentialGuesser(M), 1u << 8);
    if (!r.success) ++brute_failures;
  }
  const bool ok = known_wins[2] >= 95 && known_wins[3] >= 95 && known_wins[4] >= 95 &&
                  collisions == 100 && brute_failures >= 19;
  return Check(ok, Fmt("he2 %d/100, he3 %d/100, he4 %d/100, collision %d/100, brute force "
                       "failed %d/20",
                       known_wins[2], known_wins[3], known_wins[4], collisions, brute_failures));
}

// ---- criterion 6 ----

Outcome UniformityStatistics() {
  SeededRandom rng(6001);
  int honest_pass = 0, honest_total = 0, control_fail = 0, control_total = 0;
  for (int seed = 0; seed < 3; ++seed) {
    const auto ps1 = DeriveParams(Scheme::kHE1N, 1, 0, 8);
    const auto s = ScalarKeygen(ps1, rng);
    const auto ps2 = DeriveParams(Scheme::kHE2N, 1, 0, 8);
    const auto v = BuildKeys(ps2, rng);
    for (const Int* kappa : {&*s.sk.kappa, &*v.sk.kappa}) {
      if (*kappa > 1024) return Check(false, "kappa above 1024");
    }
    const std::size_t n1 = 50 * s.sk.kappa->get_ui() + 100;
    const std::size_t n2 = 50 * v.sk.kappa->get_ui() + 100;
    for (bool fixed_m : {true, false}) {
      std::vector<Int> a, b, pa, pb;
      const Int t_pin[] = {5};
      for (std::size_t i = 0; i < n1; ++i) {
        const Int m = fixed_m ? Int(1) : rng.Below(ps1.M);
        a.push_back(Encrypt(m, s.sk, s.pp, rng).value);
        pa.push_back(EncryptWith(m, 3, rng.Below(*s.sk.kappa), s.sk, s.pp).value);
      }
      for (std::size_t i = 0; i < n2; ++i) {
        const Int m = fixed_m ? Int(1) : rng.Below(ps2.M);
        b.push_back(Encrypt(m, v.sk, v.pp, rng).v[0]);
        pb.push_back(EncryptWith(m, 3, rng.Below(*v.sk.kappa), t_pin, v.sk, v.pp).v[0]);
      }
      honest_pass += UniformityTest(a, *s.sk.kappa).pass();
      honest_pass += UniformityTest(b, *v.sk.kappa).pass();
      honest_total += 2;
      // A random message alone spreads c mod kappa when M ~ kappa; the
      // control only means something for a fixed message.
      if (fixed_m) {
        control_fail += !UniformityTest(pa, *s.sk.kappa).pass();
        control_fail += !UniformityTest(pb, *v.sk.kappa).pass();
        control_total += 2;
      }
    }
  }
  return Check(honest_pass == honest_total && control_fail == control_total,
               Fmt("honest HE1N/HE2N streams passed %d/%d; pinned-noise controls failed %d/%d",
                   honest_pass, honest_total, control_fail, control_total));
}

// ---- criterion 7 ----

Outcome CrtEquivalence() {
  SeededRandom rng(7001);
  int total = 0;
  for (int K = 1; K <= 4; ++K) {
    const auto ps = DeriveParams(Scheme::kHE2NCRT, 2, 2, 4, 2, K);
    const auto keys = CrtKeygen(ps, rng);
    const auto limits = LimitsFor(ps);
    int accepted = 0;
    while (accepted < 200) {
      const auto circuit = RandomCircuit(ps.d, rng);
      if (!CheckCapacity(circuit, limits).ok) continue;
      ++accepted;
      std::vector<Int> plain;
      std::vector<CrtCiphertext> cts;
      for (std::size_t i = 0; i < circuit.inputs.size(); ++i) {
        plain.push_back(rng.Below(ps.M));
        cts.push_back(CrtEncrypt(plain.back(), keys.sk, keys.pp, rng));
      }
      std::vector<std::vector<VectorCiphertext>> shard_out;
      for (int j = 0; j < K; ++j) {
        std::vector<VectorCiphertext> in;
        for (const auto& c : cts) in.push_back(ShardOf(c, j));
        shard_out.push_back(CrtEvalShard(j, circuit, in, keys.pp));
      }
      const Int expect = Mod(PlainEval(circuit, plain), keys.sk.kappa);
      const Int split = CrtDecrypt(Assemble(shard_out, 0), keys.sk);
      const Int joint = CrtDecrypt(Evaluate<CrtOps>(circuit, cts, CrtOps{keys.pp}).front(), keys.sk);
      if (split != expect || joint != expect) {
        return Check(false, Fmt("mismatch at K=%d", K));
      }
      ++total;
    }
  }
  return Check(true, Fmt("%d circuits over K=1..4 agree with the plaintext value mod kappa", total));
}

// ---- criterion 8 ----

std::string RandomNandNetlist(SeededRandom& rng, int& gates_out) {
  const int inputs = 2 + static_cast<int>(rng.Below(std::uint64_t{7}));
  const int gates = 1 + static_cast<int>(rng.Below(std::uint64_t{64}));
  std::ostringstream text;
  std::vector<std::string> names;
  std::vector<int> depth;
  for (int i = 0; i < inputs; ++i) {
    names.push_back("i" + std::to_string(i));
    depth.push_back(0);
    text << "INPUT " << names.back() << "\n";
  }
  for (int g = 0; g < gates; ++g) {
    auto pick = [&] {
      int x = static_cast<int>(rng.Below(std::uint64_t(names.size())));
      while (depth[x] >= 40) x = static_cast<int>(rng.Below(std::uint64_t(inputs)));
      return x;
    };
    const int a = pick(), b = pick();
    names.push_back("g" + std::to_string(g));
    depth.push_back(1 + std::max(depth[a], depth[b]));
    text << names.back() << " = NAND " << names[a] << " " << names[b] << "\n";
  }
  const int outs = 1 + static_cast<int>(rng.Below(std::uint64_t{4}));
  text << "OUTPUT " << names.back() << "\n";
  for (int o = 1; o < outs; ++o) {
    text << "OUTPUT " << names[inputs + rng.Below(std::uint64_t(gates))] << "\n";
  }
  gates_out = gates;
  return text.str();
}

std::vector<bool> OracleBool(const BoolNetlist& n, const std::vector<bool>& in) {
  std::vector<bool> w(n.nodes.size());
  for (std::size_t i = 0; i < n.inputs.size(); ++i) w[n.inputs[i]] = in[i];
  for (std::size_t i = 0; i < n.nodes.size(); ++i) {
    const auto& node = n.nodes[i];
    if (node.kind == BoolNode::kGate) w[i] = node.tt[2 * w[node.lhs] + w[node.rhs]] == '1';
  }
  std::vector<bool> out;
  for (const auto& o : n.outputs) out.push_back(o.constant ? *o.constant : bool(w[o.node]));
  return out;
}

// Independent check of every program against its truth table.
bool ProgramsVerify(const Compilation& comp, const Int& p) {
  const auto& cc = comp.circuit;
  const auto& sec = comp.secrets;
  std::vector<int> input_index(cc.netlist.nodes.size(), -1);
  for (std::size_t i = 0; i < cc.netlist.inputs.size(); ++i) input_index[cc.netlist.inputs[i]] = int(i);
  for (std::size_t e = 0; e < cc.edges.size(); ++e) {
    const auto& src = cc.netlist.nodes[cc.edges[e].source];
    const auto& k = sec.coefficients[e];
    const Encoding& out = sec.edge_encodings[e];
    if (src.kind == BoolNode::kInput) {
      const Encoding& a = sec.input_encodings[input_index[cc.edges[e].source]];
      for (int x = 0; x < 2; ++x)
        if (Mod(k[0] + k[1] * a[x] - out[x], p) != 0) return false;
      continue;
    }
    const Encoding& a = sec.edge_encodings[cc.in_edges[cc.edges[e].source][0]];
    const Encoding& b = sec.edge_encodings[cc.in_edges[cc.edges[e].source][1]];
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const bool bit = src.tt[2 * x + y] == '1';
        if (Mod(k[0] + k[1] * a[x] + k[2] * b[y] + k[3] * a[x] * b[y] - out[bit], p) != 0) {
          return false;
        }
      }
  }
  return true;
}

Outcome BooleanFhe() {
  SeededRandom rng(8001);
  const FheKey key = MakeFheKey(3, 64, 80, rng);
  const Int& p = key.keys.sk.p;
  int netlists = 0, evaluations = 0, max_gates = 0;
  Int max_wire = 0;
  auto run = [&](const BoolNetlist& net, const std::vector<bool>& in) {
    auto comp = CompileBooleanCircuit(net, key, rng);
    if (!ProgramsVerify(comp, p)) throw std::runtime_error("a gate program does not verify");
    std::vector<char> buf(in.begin(), in.end());
    const std::span<const bool> bits(reinterpret_cast<const bool*>(buf.data()), buf.size());
    const auto trace = FheEvaluate(comp.circuit, FheEncryptInputs(bits, comp.secrets, key, rng));
    const Int wire = MaxWireValue(trace, key);
    if (wire > max_wire) max_wire = wire;
    ++evaluations;
    return FheDecryptOutputs(comp.circuit, trace, key) == OracleBool(net, in);
  };
  for (int t = 0; t < 100; ++t) {
    int gates = 0;
    const auto net = ParseBoolNetlist(RandomNandNetlist(rng, gates));
    max_gates = std::max(max_gates, gates);
    if (net.Depth() > 40) return Check(false, "generated netlist too deep");
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<bool> in(net.inputs.size());
      for (std::size_t i = 0; i < in.size(); ++i) in[i] = rng.Below(std::uint64_t{2});
      if (!run(net, in)) return Check(false, Fmt("netlist %d decrypts wrongly", t));
    }
    ++netlists;
  }
  const auto adder = RippleCarryAdder(8);
  std::vector<std::pair<unsigned, unsigned>> cases{{0, 0}, {255, 255}, {255, 1}, {170, 85}};
  for (int t = 0; t < 16; ++t) cases.emplace_back(rng.Below(std::uint64_t{256}), rng.Below(std::uint64_t{256}));
  for (const auto& [a, b] : cases) {
    std::vector<bool> in(16);
    for (int i = 0; i < 8; ++i) {
      in[i] = (a >> i) & 1;
      in[8 + i] = (b >> i) & 1;
    }
    if (!run(adder, in)) return Check(false, Fmt("adder wrong on %u + %u", a, b));
    const auto plain = OracleBool(adder, in);
    unsigned sum = 0;
    for (int i = 0; i < 9; ++i) sum |= unsigned(plain[i]) << i;
    if (sum != a + b) return Check(false, "adder netlist itself is wrong");
  }
  const bool ok = max_wire < 2 * key.kappa;
  return Check(ok, Fmt("%d NAND netlists (up to %d gates) and %zu adder sums, %d evaluations; max "
                       "wire = 2 kappa - %s",
                       netlists, max_gates, cases.size(), evaluations,
                       ToString(2 * key.kappa - max_wire).c_str()));
}

// ---- criterion 9 ----

Outcome Pipeline() {
  std::vector<PipelineReport> singles;
  int runs = 0;
  for (int d : {2, 3}) {
    for (const char* name : {"he1", "he1n", "he2", "he2n"}) {
      const Scheme s = ParseScheme(name).scheme;
      const ParameterSet ps = DeriveParams(s, d, 15, IsNoisy(s) ? 8 : 32);
      std::optional<Int> first;
      for (int workers : {1, 4, 16}) {
        PipelineJob job{ps, 24000, d, 9001, workers, 3};
        const auto r = RunPipeline(job);
        ++runs;
        if (!r.verified) return Check(false, "unverified run");
        if (first && *first != r.result) return Check(false, "worker count changed the result");
        first = r.result;
        if (workers == 1) singles.push_back(r);
      }
    }
  }
  bool ordinal = true;
  std::string detail = Fmt("%d verified runs, n=24000, d=2,3, workers 1/4/16;", runs);
  int claims = 0;
  for (const auto& c : RelativeBench(singles)) {
    if (c.claim.rfind("per-Mult", 0) != 0) continue;
    ++claims;
    ordinal = ordinal && c.ratio > 1.5;
    detail += Fmt(" %s x%.1f;", c.claim.c_str(), c.ratio);
  }
  return Check(ordinal && claims == 4, detail);
}

}  // namespace
}  // namespace intfhe

int main() {
  using namespace intfhe;
  struct Criterion {
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {"parameter reproduction", ParameterReproduction},
      {"homomorphism suites", HomomorphismSuites},
      {"matrix identities", MatrixIdentities},
      {"associativity fix", AssociativityFix},
      {"attack validation", AttackValidation},
      {"uniformity statistics", UniformityStatistics},
      {"CRT equivalence", CrtEquivalence},
      {"Boolean FHE", BooleanFhe},
      {"pipeline", Pipeline},
  };
  int failures = 0;
  int id = 0;
  for (const auto& c : criteria) {
    ++id;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", id, c.name,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !out.pass;
  }
  return failures == 0 ? 0 : 1;
}

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

#include "intfhe/boolean.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>

#include "intfhe/errors.h"
#include "intfhe/random.h"

namespace intfhe {
namespace {

Error ParseError(int line, const std::string& what) {
  return Error(ErrorCategory::kParse, "line " + std::to_string(line) + ": " + what);
}

std::optional<std::string> TruthTable(const std::string& op) {
  static const std::map<std::string, std::string> named = {
      {"NAND", "1110"}, {"AND", "0001"}, {"OR", "0111"},
      {"NOR", "1000"},  {"XOR", "0110"}, {"XNOR", "1001"}};
  if (auto it = named.find(op); it != named.end()) return it->second;
  if (op.size() == 8 && op.rfind("GATE", 0) == 0) {
    std::string tt = op.substr(4);
    if (std::all_of(tt.begin(), tt.end(), [](char c) { return c == '0' || c == '1'; })) return tt;
  }
  return std::nullopt;
}

// Parsed value of a name: a node of the folded netlist or a constant bit.
using Ref = std::variant<int, bool>;

Vec SumVecs(std::span<const Vec> terms, const Int& pq) {
  Vec acc = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) acc = AddVec(acc, terms[i], pq);
  return acc;
}

}  // namespace

bool GateValue(std::string_view tt, bool a, bool b) { return tt[2 * a + b] == '1'; }

int BoolNetlist::GateCount() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                        [](const BoolNode& n) { return n.kind == BoolNode::kGate; }));
}

int BoolNetlist::Depth() const {
  std::vector<int> depth(nodes.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].kind == BoolNode::kGate) {
      depth[i] = 1 + std::max(depth[nodes[i].lhs], depth[nodes[i].rhs]);
    }
    best = std::max(best, depth[i]);
  }
  return best;
}

BoolNetlist ParseBoolNetlist(std::string_view text) {
  BoolNetlist net;
  std::map<std::string, Ref> names;
  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;

  auto resolve = [&](const std::string& tok, int line) -> Ref {
    if (tok == "0") return false;
    if (tok == "1") return true;
    auto it = names.find(tok);
    if (it == names.end()) throw ParseError(line, "'" + tok + "' used before definition");
    return it->second;
  };
  auto define = [&](const std::string& name, Ref ref, int line) {
    if (names.count(name)) throw ParseError(line, "'" + name + "' defined twice");
    names.emplace(name, ref);
  };

  while (std::getline(lines, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ws(raw);
    std::vector<std::string> tok;
    for (std::string t; ws >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "INPUT") {
      if (tok.size() != 2) throw ParseError(line_no, "INPUT takes one name");
      net.nodes.push_back(BoolNode{BoolNode::kInput, tok[1], "", -1, -1});
      const int id = static_cast<int>(net.nodes.size()) - 1;
      net.inputs.push_back(id);
      define(tok[1], id, line_no);
    } else if (tok[0] == "OUTPUT") {
      if (tok.size() != 2) throw ParseError(line_no, "OUTPUT takes one name");
      Ref r = resolve(tok[1], line_no);
      BoolOutput out{tok[1], -1, std::nullopt};
      if (std::holds_alternative<bool>(r)) {
        out.constant = std::get<bool>(r);
      } else {
        out.node = std::get<int>(r);
      }
      net.outputs.push_back(out);
    } else {
      if (tok.size() != 5 || tok[1] != "=") {
        throw ParseError(line_no, "expected 'name = GATE<tt4> a b'");
      }
      auto tt = TruthTable(tok[2]);
      if (!tt) throw ParseError(line_no, "unknown gate '" + tok[2] + "'");
      const Ref a = resolve(tok[3], line_no);
      const Ref b = resolve(tok[4], line_no);
      const bool ca = std::holds_alternative<bool>(a);
      const bool cb = std::holds_alternative<bool>(b);
      std::string folded = *tt;
      int lhs;
      int rhs;
      if (ca && cb) {
        define(tok[0], GateValue(*tt, std::get<bool>(a), std::get<bool>(b)), line_no);
        continue;
      } else if (ca || cb) {
        // One constant operand: a unary function of the other, applied to (x, x).
        const int x = ca ? std::get<int>(b) : std::get<int>(a);
        auto g = [&](bool v) {
          return ca ? GateValue(*tt, std::get<bool>(a), v) : GateValue(*tt, v, std::get<bool>(b));
        };
        if (g(false) == g(true)) {
          define(tok[0], g(false), line_no);
          continue;
        }
        for (int i = 0; i < 4; ++i) folded[i] = g(i >= 2) ? '1' : '0';
        lhs = rhs = x;
      } else {
        lhs = std::get<int>(a);
        rhs = std::get<int>(b);
      }
      net.nodes.push_back(BoolNode{BoolNode::kGate, tok[0], folded, lhs, rhs});
      define(tok[0], static_cast<int>(net.nodes.size()) - 1, line_no);
    }
  }
  return net;
}

std::string FormatBoolNetlist(const BoolNetlist& net) {
  std::ostringstream os;
  for (const auto& n : net.nodes) {
    if (n.kind == BoolNode::kInput) {
      os << "INPUT " << n.name << "\n";
    } else {
      os << n.name << " = GATE" << n.tt << " " << net.nodes[n.lhs].name << " "
         << net.nodes[n.rhs].name << "\n";
    }
  }
  int k = 0;
  for (const auto& o : net.outputs) {
    if (o.constant) {
      const std::string name = "_const" + std::to_string(k++);
      os << name << " = GATE" << (*o.constant ? "1111" : "0000") << " 0 0\nOUTPUT " << name << "\n";
    } else {
      os << "OUTPUT " << net.nodes[o.node].name << "\n";
    }
  }
  return os.str();
}

std::vector<bool> EvaluateBool(const BoolNetlist& net, std::span<const bool> inputs) {
  if (inputs.size() != net.inputs.size()) throw InvalidArgument("EvaluateBool: input count");
  std::vector<bool> v(net.nodes.size());
  for (std::size_t i = 0; i < net.inputs.size(); ++i) v[net.inputs[i]] = inputs[i];
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    const auto& n = net.nodes[i];
    if (n.kind == BoolNode::kGate) v[i] = GateValue(n.tt, v[n.lhs], v[n.rhs]);
  }
  std::vector<bool> out;
  for (const auto& o : net.outputs) out.push_back(o.constant ? *o.constant : v[o.node]);
  return out;
}

BoolNetlist RippleCarryAdder(int bits) {
  if (bits < 1) throw InvalidArgument("RippleCarryAdder: bits must be >= 1");
  std::ostringstream os;
  for (int i = 0; i < bits; ++i) os << "INPUT a" << i << "\n";
  for (int i = 0; i < bits; ++i) os << "INPUT b" << i << "\n";
  std::string carry = "0";
  for (int i = 0; i < bits; ++i) {
    const std::string a = "a" + std::to_string(i);
    const std::string b = "b" + std::to_string(i);
    const std::string t = "_" + std::to_string(i) + "_";
    os << t << "n1 = NAND " << a << " " << b << "\n"
       << t << "n2 = NAND " << a << " " << t << "n1\n"
       << t << "n3 = NAND " << b << " " << t << "n1\n"
       << t << "x = NAND " << t << "n2 " << t << "n3\n"
       << t << "n4 = NAND " << t << "x " << carry << "\n"
       << t << "n5 = NAND " << t << "x " << t << "n4\n"
       << t << "n6 = NAND " << carry << " " << t << "n4\n"
       << "s" << i << " = NAND " << t << "n5 " << t << "n6\n"
       << t << "c = NAND " << t << "n4 " << t << "n1\n";
    carry = t + "c";
  }
  for (int i = 0; i < bits; ++i) os << "OUTPUT s" << i << "\n";
  os << "OUTPUT " << carry << "\n";
  return ParseBoolNetlist(os.str());
}

Encoding DrawEncoding(const Int& kappa, RandomSource& rng) {
  return Encoding{2 * rng.Below(kappa), 1 + 2 * rng.Below(kappa)};
}

std::optional<std::array<Int, 2>> InterpolateLinear(const Encoding& alpha, const Encoding& gamma,
                                                    const Int& mod) {
  auto inv = ModInverse(alpha.w1 - alpha.w0, mod);
  if (!inv) return std::nullopt;
  const Int b = Mod(*inv * (gamma.w1 - gamma.w0), mod);
  const Int a = Mod(*inv * (alpha.w1 * gamma.w0 - alpha.w0 * gamma.w1), mod);
  return std::array<Int, 2>{a, b};
}

std::optional<std::array<Int, 4>> InterpolateGate(const Encoding& alpha, const Encoding& beta,
                                                  const Encoding& gamma, std::string_view tt,
                                                  const Int& mod) {
  auto ia = ModInverse(alpha.w1 - alpha.w0, mod);
  auto ib = ModInverse(beta.w1 - beta.w0, mod);
  if (!ia || !ib) return std::nullopt;
  // Lagrange factors L_a(x) = l[a][0] + l[a][1] x, likewise for y.
  const Int l[2][2] = {{*ia * alpha.w1, -*ia}, {-*ia * alpha.w0, *ia}};
  const Int m[2][2] = {{*ib * beta.w1, -*ib}, {-*ib * beta.w0, *ib}};
  Int a = 0, b = 0, c = 0, d = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const Int& t = gamma[GateValue(tt, x, y)];
      a += t * l[x][0] * m[y][0];
      b += t * l[x][1] * m[y][0];
      c += t * l[x][0] * m[y][1];
      d += t * l[x][1] * m[y][1];
    }
  return std::array<Int, 4>{Mod(a, mod), Mod(b, mod), Mod(c, mod), Mod(d, mod)};
}

bool VerifyGate(const std::array<Int, 4>& k, const Encoding& alpha, const Encoding& beta,
                const Encoding& gamma, std::string_view tt, const Int& mod) {
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const Int& u = alpha[x];
      const Int& v = beta[y];
      if (Mod(k[0] + k[1] * u + k[2] * v + k[3] * u * v - gamma[GateValue(tt, x, y)], mod) != 0) {
        return false;
      }
    }
  return true;
}

Int FheKappa(const Int& capacity) {
  Int x = (capacity - 1) / 8;
  if (x < 1) throw InvalidArgument("capacity too small for any kappa");
  Int root;
  mpz_root(root.get_mpz_t(), x.get_mpz_t(), 3);
  return root;
}

FheKey MakeFheKeyForModulus(const Modulus& mod, int k, RandomSource& rng, bool associativity_fix) {
  if (k < 3) throw InvalidArgument("Boolean FHE needs HEk with k >= 3");
  const Int capacity = Pow2(BitLength(mod.p) - 1);
  const Int kappa = FheKappa(capacity);
  if (kappa < 2) throw InvalidArgument("p too small for a useful kappa");
  BuildOptions opts;
  opts.associativity_fix = associativity_fix;
  opts.capacity = capacity;
  FheKey key{BuildKeysForModulus(mod, k, kappa, 2 * kappa, rng, opts), kappa};
  return key;
}

FheKey MakeFheKey(int k, unsigned lambda, unsigned eta, RandomSource& rng, bool associativity_fix) {
  return MakeFheKeyForModulus(GenerateModulus(lambda, eta, rng), k, rng, associativity_fix);
}

Compilation CompileBooleanCircuit(const BoolNetlist& net, const FheKey& key, RandomSource& rng) {
  const VectorSecretKey& sk = key.keys.sk;
  const VectorPublicParams& pp = key.keys.pp;
  const Int& kappa = key.kappa;
  if (8 * kappa * kappa * kappa >= pp.capacity) {
    throw Error(ErrorCategory::kCapacity, "kappa too large: 8 kappa^3 must stay below capacity");
  }
  Compilation out;
  CompiledCircuit& cc = out.circuit;
  CompileSecrets& sec = out.secrets;
  cc.netlist = net;
  cc.pp = pp;
  cc.wire_bound = 2 * kappa;
  const std::size_t n = net.nodes.size();
  cc.out_edges.assign(n, {});
  cc.in_edges.assign(n, {-1, -1});

  auto add_edge = [&](int source, int consumer, int slot) {
    cc.edges.push_back(Edge{source, consumer, slot});
    const int id = static_cast<int>(cc.edges.size()) - 1;
    cc.out_edges[source].push_back(id);
    return id;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = net.nodes[i];
    if (node.kind != BoolNode::kGate) continue;
    cc.in_edges[i][0] = add_edge(node.lhs, static_cast<int>(i), 0);
    cc.in_edges[i][1] = add_edge(node.rhs, static_cast<int>(i), 1);
  }
  for (std::size_t o = 0; o < net.outputs.size(); ++o) {
    const auto& out_spec = net.outputs[o];
    cc.output_edges.push_back(out_spec.constant ? -1 : add_edge(out_spec.node, -1, static_cast<int>(o)));
  }

  std::vector<int> input_index(n, -1);
  for (std::size_t i = 0; i < net.inputs.size(); ++i) {
    input_index[net.inputs[i]] = static_cast<int>(i);
    sec.input_encodings.push_back(DrawEncoding(kappa, rng));
  }
  for (std::size_t e = 0; e < cc.edges.size(); ++e) sec.edge_encodings.push_back(DrawEncoding(kappa, rng));

  const Int bound = cc.wire_bound;
  cc.programs.resize(cc.edges.size());
  sec.coefficients.resize(cc.edges.size());
  for (std::size_t e = 0; e < cc.edges.size(); ++e) {
    const Edge& edge = cc.edges[e];
    const BoolNode& src = net.nodes[edge.source];
    Encoding& gamma = sec.edge_encodings[e];
    std::vector<Int> coeffs;
    for (int attempt = 0;; ++attempt) {
      if (attempt == 64) throw KeyGenerationFailure("interpolation stayed singular");
      if (src.kind == BoolNode::kInput) {
        const Encoding& alpha = sec.input_encodings[input_index[edge.source]];
        auto lin = InterpolateLinear(alpha, gamma, sk.p);
        if (lin && Mod((*lin)[0] + (*lin)[1] * alpha.w0 - gamma.w0, sk.p) == 0 &&
            Mod((*lin)[0] + (*lin)[1] * alpha.w1 - gamma.w1, sk.p) == 0) {
          coeffs.assign(lin->begin(), lin->end());
          break;
        }
      } else {
        const Encoding& alpha = sec.edge_encodings[cc.in_edges[edge.source][0]];
        const Encoding& beta = sec.edge_encodings[cc.in_edges[edge.source][1]];
        auto quad = InterpolateGate(alpha, beta, gamma, src.tt, sk.p);
        if (quad && VerifyGate(*quad, alpha, beta, gamma, src.tt, sk.p)) {
          coeffs.assign(quad->begin(), quad->end());
          break;
        }
      }
      gamma = DrawEncoding(kappa, rng);
    }
    for (const auto& k : coeffs) cc.programs[e].push_back(EncryptResidue(k, bound, sk, pp, rng));
    sec.coefficients[e] = std::move(coeffs);
  }
  return out;
}

std::vector<VectorCiphertext> FheEncryptInputs(std::span<const bool> bits,
                                               const CompileSecrets& secrets, const FheKey& key,
                                               RandomSource& rng) {
  if (bits.size() != secrets.input_encodings.size()) throw InvalidArgument("input bit count");
  std::vector<VectorCiphertext> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    out.push_back(EncryptResidue(secrets.input_encodings[i][bits[i]], 2 * key.kappa, key.keys.sk,
                                 key.keys.pp, rng));
  }
  return out;
}

FheTrace FheEvaluate(CompiledCircuit& cc, std::span<const VectorCiphertext> inputs,
                     bool allow_reuse) {
  if (cc.evaluations > 0 && !allow_reuse) {
    throw Error(ErrorCategory::kInvalidArgument,
                "compiled circuit already evaluated; reuse exposes wire encodings (recompile or "
                "pass the unsafe reuse flag)");
  }
  const BoolNetlist& net = cc.netlist;
  if (inputs.size() != net.inputs.size()) throw InvalidArgument("encrypted input count");
  ++cc.evaluations;
  const VectorPublicParams& pp = cc.pp;
  const Int& pq = pp.pq;
  FheTrace trace;
  trace.edge_values.resize(cc.edges.size());
  std::vector<int> input_index(net.nodes.size(), -1);
  for (std::size_t i = 0; i < net.inputs.size(); ++i) input_index[net.inputs[i]] = static_cast<int>(i);

  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    const BoolNode& node = net.nodes[i];
    if (node.kind == BoolNode::kInput) {
      const Vec& x = inputs[input_index[i]].v;
      for (int e : cc.out_edges[i]) {
        const auto& k = cc.programs[e];
        trace.edge_values[e] = VectorCiphertext{AddVec(k[0].v, MultRaw(k[1].v, x, pp), pq), cc.wire_bound};
      }
    } else {
      const Vec& x = trace.edge_values[cc.in_edges[i][0]].v;
      const Vec& y = trace.edge_values[cc.in_edges[i][1]].v;
      const Vec xy = MultRaw(x, y, pp);
      for (int e : cc.out_edges[i]) {
        const auto& k = cc.programs[e];
        const Vec terms[4] = {k[0].v, MultRaw(k[1].v, x, pp), MultRaw(k[2].v, y, pp),
                              MultRaw(k[3].v, xy, pp)};
        trace.edge_values[e] = VectorCiphertext{SumVecs(terms, pq), cc.wire_bound};
      }
    }
  }
  for (int e : cc.output_edges) {
    trace.outputs.push_back(e < 0 ? VectorCiphertext{} : trace.edge_values[e]);
  }
  return trace;
}

std::vector<bool> FheDecryptOutputs(const CompiledCircuit& cc, const FheTrace& trace,
                                    const FheKey& key) {
  std::vector<bool> bits;
  for (std::size_t o = 0; o < cc.netlist.outputs.size(); ++o) {
    const auto& spec = cc.netlist.outputs[o];
    if (spec.constant) {
      bits.push_back(*spec.constant);
      continue;
    }
    const Int w = DecryptResidue(trace.outputs[o], key.keys.sk);
    if (w >= 2 * key.kappa) {
      throw Error(ErrorCategory::kVerificationMismatch,
                  "output '" + spec.name + "' decrypted to " + ToString(w) + " >= 2 kappa");
    }
    bits.push_back(mpz_odd_p(w.get_mpz_t()) != 0);
  }
  return bits;
}

Int MaxWireValue(const FheTrace& trace, const FheKey& key) {
  Int best = 0;
  for (const auto& c : trace.edge_values) best = std::max(best, DecryptResidue(c, key.keys.sk));
  return best;
}

AttackReport ReuseCollisionAttack(std::span<const FheTrace> runs, const VectorPublicParams& pp) {
  AttackReport report;
  report.name = "fhe-reuse-collision";
  if (runs.size() < 3) {
    report.applicable = false;
    report.note = "needs three evaluations of one compiled circuit";
    return report;
  }
  const Int& pq = pp.pq;
  std::vector<Vec> zeros;
  const std::size_t wires = runs[0].edge_values.size();
  for (std::size_t e = 0; e < wires && static_cast<int>(zeros.size()) < pp.k; ++e) {
    const Vec& c1 = runs[0].edge_values[e].v;
    const Vec& c2 = runs[1].edge_values[e].v;
    const Vec& c3 = runs[2].edge_values[e].v;
    Vec z = MultRaw(MultRaw(SubVec(c1, c2, pq), SubVec(c1, c3, pq), pp), SubVec(c2, c3, pq), pp);
    ++report.operations;
    if (std::all_of(z.begin(), z.end(), [](const Int& x) { return x == 0; })) continue;
    zeros.push_back(std::move(z));
  }
  AttackReport det = ZeroDeterminantAttack(zeros, pq);
  report.success = det.success;
  report.p = det.p;
  report.applicable = det.applicable;
  report.note = det.note;
  return report;
}

}  // namespace intfhe

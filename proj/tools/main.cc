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

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "intfhe/attacks.h"
#include "intfhe/boolean.h"
#include "intfhe/circuit.h"
#include "intfhe/crt.h"
#include "intfhe/errors.h"
#include "intfhe/io.h"
#include "intfhe/params.h"
#include "intfhe/pipeline.h"
#include "intfhe/random.h"
#include "intfhe/scalar.h"
#include "intfhe/vector.h"

#ifndef INTFHE_DEFAULT_PRESET_DIR
#define INTFHE_DEFAULT_PRESET_DIR "presets"
#endif

namespace intfhe {
namespace {

constexpr const char* kPresetEnv = "INTFHE_PRESET_DIR";

int ExitCode(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kInvalidArgument: return 2;
    case ErrorCategory::kParse: return 3;
    case ErrorCategory::kCapacity: return 4;
    case ErrorCategory::kOverflowRisk: return 5;
    case ErrorCategory::kVerificationMismatch: return 6;
    case ErrorCategory::kAttackBudget: return 7;
    case ErrorCategory::kKeyGeneration: return 8;
    case ErrorCategory::kIo: return 9;
  }
  return 1;
}

struct Global {
  std::optional<std::uint64_t> seed;
  std::string report = "text";
  bool insecure_toy = false;

  bool json() const { return report == "json-lines"; }
};

std::unique_ptr<RandomSource> MakeRng(const Global& g) {
  if (g.seed) return std::make_unique<SeededRandom>(*g.seed);
  return std::make_unique<SystemRandom>();
}

// ---- files ----

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::kIo, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream OpenOut(const std::string& path, bool secret) {
  if (secret) {
    // Create (or clamp) with owner-only permissions before any bytes land.
    const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (fd < 0) throw Error(ErrorCategory::kIo, "cannot create '" + path + "'");
    const bool ok = ::fchmod(fd, 0600) == 0;
    ::close(fd);
    if (!ok) throw Error(ErrorCategory::kIo, "cannot restrict permissions on '" + path + "'");
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCategory::kIo, "cannot open '" + path + "' for writing");
  return out;
}

template <typename Fn>
void WriteFile(const std::string& path, bool secret, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  auto out = OpenOut(path, secret);
  fn(out);
  out.flush();
  if (!out) throw Error(ErrorCategory::kIo, "write to '" + path + "' failed");
}

KeyBundle LoadKeys(const std::string& path) {
  auto in = OpenIn(path);
  return ReadKeys(in);
}

std::vector<std::string> LoadLines(const std::string& path) {
  if (path == "-") return ReadLines(std::cin);
  auto in = OpenIn(path);
  return ReadLines(in);
}

std::string Slurp(const std::string& path) {
  auto in = OpenIn(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ---- parameters ----

struct ParamFlags {
  std::string scheme;
  std::string preset;
  std::string preset_file;
  int d = 2;
  std::optional<int> n_bits;
  std::optional<int> rho;
  int k = 0;
  int shards = 1;
  bool effective = false;
  std::optional<int> lambda;
  std::optional<int> eta;

  void Attach(CLI::App* app) {
    app->add_option("--scheme", scheme, "he1, he1n, he2, he2n, heK, heKn, he2ncrt");
    app->add_option("--preset", preset, "named parameter set");
    app->add_option("--preset-file", preset_file, "preset file (overrides the preset directory)");
    app->add_option("--d", d, "circuit degree")->check(CLI::PositiveNumber);
    app->add_option("--n-bits", n_bits, "log2 of the input count bound (default rho/2)");
    app->add_option("--rho", rho, "plaintext entropy in bits (default 32)");
    app->add_option("--k", k, "vector dimension for heK schemes");
    app->add_option("--shards", shards, "CRT shard count for he2ncrt")->check(CLI::PositiveNumber);
    app->add_flag("--effective", effective, "noisy schemes: --rho is the effective entropy rho'");
    app->add_option("--lambda", lambda, "override the bit length of p");
    app->add_option("--eta", eta, "override the bit length of q");
  }
};

std::string PresetPath(const ParamFlags& f) {
  if (!f.preset_file.empty()) return f.preset_file;
  if (const char* dir = std::getenv(kPresetEnv); dir && *dir) return std::string(dir) + "/presets.txt";
  return std::string(INTFHE_DEFAULT_PRESET_DIR) + "/presets.txt";
}

std::vector<Preset> LoadPresets(const ParamFlags& f) {
  auto in = OpenIn(PresetPath(f));
  return ParsePresets(in);
}

// Toy sets (anything below the brute-force margin) need --insecure-toy.
ParameterSet Admit(ParameterSet ps, const Global& g) {
  if (Violations(ps).empty()) return ps;
  if (!g.insecure_toy) {
    std::string msg = "parameters are below the security margins";
    for (const auto& v : Violations(ps)) msg += "; " + v;
    msg += ". Pass --insecure-toy to run them anyway";
    throw InvalidArgument(msg);
  }
  ps.insecure_toy = true;
  Validate(ps);
  return ps;
}

ParameterSet Resolve(const ParamFlags& f, const Global& g) {
  ParameterSet ps;
  if (!f.preset.empty()) {
    bool found = false;
    for (const auto& p : LoadPresets(f)) {
      if (p.name == f.preset) {
        ps = p.params;
        found = true;
      }
    }
    if (!found) throw InvalidArgument("unknown preset '" + f.preset + "' in " + PresetPath(f));
  } else {
    if (f.scheme.empty()) throw InvalidArgument("give --scheme or --preset");
    const SchemeSpec spec = ParseScheme(f.scheme);
    const int rho = f.rho.value_or(32);
    const int n_bits = f.n_bits.value_or(rho / 2);
    const int k = f.k ? f.k : spec.k;
    ps = f.effective ? DeriveParamsEffective(spec.scheme, f.d, n_bits, rho, k, f.shards)
                     : DeriveParams(spec.scheme, f.d, n_bits, rho, k, f.shards);
  }
  if (f.lambda) ps.lambda = *f.lambda;
  if (f.eta) ps.eta = *f.eta;
  return Admit(ps, g);
}

nlohmann::json ParamsJson(const ParameterSet& ps) {
  return {{"scheme", SchemeName(ps.scheme, ps.k)},
          {"d", ps.d},
          {"n_bits", ps.n_bits},
          {"rho", ps.rho},
          {"rho_prime", ps.rho_prime},
          {"kappa_bits", ps.kappa_bits},
          {"lambda", ps.lambda},
          {"eta", ps.eta},
          {"k", ps.k},
          {"K", ps.K},
          {"insecure_toy", ps.insecure_toy}};
}

// ---- subcommands ----

int ParamsDerive(const ParamFlags& f, const Global& g) {
  const ParameterSet ps = Resolve(f, g);
  if (g.json()) {
    std::cout << ParamsJson(ps).dump() << "\n";
  } else {
    std::cout << Describe(ps) << "\n";
  }
  return 0;
}

int ParamsList(const ParamFlags& f, const Global& g) {
  for (const auto& p : LoadPresets(f)) {
    if (g.json()) {
      auto j = ParamsJson(p.params);
      j["name"] = p.name;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << p.name << ": " << Describe(p.params) << "\n";
    }
  }
  return 0;
}

struct KeygenFlags {
  std::string secret_path;
  std::string public_path;
  bool fhe = false;
};

KeyBundle FheBundle(const ParamFlags& f, const Global& g, RandomSource& rng) {
  const int k = f.k ? f.k : 3;
  if (!f.lambda || !f.eta) throw InvalidArgument("--fhe needs --lambda and --eta");
  if (*f.lambda < 128 && !g.insecure_toy) {
    throw InvalidArgument("FHE keys with lambda < 128 are toys; pass --insecure-toy");
  }
  FheKey key = MakeFheKey(k, *f.lambda, *f.eta, rng);
  ParameterSet ps;
  ps.scheme = Scheme::kHEkN;
  ps.k = k;
  ps.d = 3;
  ps.M = 2 * key.kappa;
  ps.kappa_bits = static_cast<int>(BitLength(key.kappa));
  ps.rho = 1;
  ps.rho_prime = ps.rho + ps.kappa_bits;
  ps.lambda = *f.lambda;
  ps.eta = *f.eta;
  ps.insecure_toy = *f.lambda < 128;
  KeyBundle b;
  b.params = ps;
  b.vector = std::move(key.keys);
  b.has_secret = true;
  return b;
}

int Keygen(const ParamFlags& f, const KeygenFlags& kf, const Global& g) {
  auto rng = MakeRng(g);
  const KeyBundle keys = kf.fhe ? FheBundle(f, g, *rng) : GenerateKeys(Resolve(f, g), *rng);
  WriteFile(kf.secret_path, true, [&](std::ostream& o) { WriteSecretKey(o, keys); });
  if (!kf.public_path.empty()) {
    WriteFile(kf.public_path, false, [&](std::ostream& o) { WritePublicParams(o, keys); });
  }
  if (g.json()) {
    auto j = ParamsJson(keys.params);
    j["secret"] = kf.secret_path;
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "wrote " << kf.secret_path << (kf.public_path.empty() ? "" : " and " + kf.public_path)
              << " (" << Describe(keys.params) << ")\n";
  }
  return 0;
}

struct IoFlags {
  std::string key;
  std::string in = "-";
  std::string out = "-";
  bool force = false;
  std::string fhe_program;
};

int EncryptCmd(const IoFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.key);
  if (!keys.has_secret) throw InvalidArgument("encryption needs the secret key file");
  auto rng = MakeRng(g);
  std::vector<std::string> out;
  for (const auto& line : LoadLines(f.in)) {
    const Int m = ParseInt(line);
    if (keys.scalar) {
      out.push_back(FormatCiphertext(Encrypt(m, keys.scalar->sk, keys.scalar->pp, *rng)));
    } else if (keys.vector) {
      out.push_back(FormatCiphertext(Encrypt(m, keys.vector->sk, keys.vector->pp, *rng)));
    } else {
      out.push_back(FormatCiphertext(CrtEncrypt(m, keys.crt->sk, keys.crt->pp, *rng)));
    }
  }
  WriteFile(f.out, false, [&](std::ostream& o) {
    for (const auto& l : out) o << l << "\n";
  });
  return 0;
}

int DecryptFhe(const IoFlags& f, const KeyBundle& keys) {
  if (!keys.vector || !keys.vector->sk.kappa) throw InvalidArgument("not an FHE key");
  auto in = OpenIn(f.fhe_program);
  const CompiledCircuit cc = ReadCompiledCircuit(in);
  const FheKey key{*keys.vector, *keys.vector->sk.kappa};
  const auto lines = LoadLines(f.in);
  if (lines.size() != cc.netlist.outputs.size()) {
    throw InvalidArgument("expected one line per circuit output");
  }
  FheTrace trace;
  for (const auto& l : lines) trace.outputs.push_back(l == "-" ? VectorCiphertext{} : ParseVectorCiphertext(l));
  const auto bits = FheDecryptOutputs(cc, trace, key);
  WriteFile(f.out, false, [&](std::ostream& o) {
    for (std::size_t i = 0; i < bits.size(); ++i) o << cc.netlist.outputs[i].name << " " << bits[i] << "\n";
  });
  return 0;
}

int DecryptCmd(const IoFlags& f, const Global&) {
  const KeyBundle keys = LoadKeys(f.key);
  if (!keys.has_secret) throw InvalidArgument("decryption needs the secret key file");
  if (!f.fhe_program.empty()) return DecryptFhe(f, keys);
  std::vector<std::string> out;
  for (const auto& line : LoadLines(f.in)) {
    Int m;
    if (keys.scalar) {
      m = Decrypt(ParseScalarCiphertext(line), keys.scalar->sk, f.force);
    } else if (keys.vector) {
      m = Decrypt(ParseVectorCiphertext(line), keys.vector->sk, f.force);
    } else {
      m = CrtDecrypt(ParseCrtCiphertext(line), keys.crt->sk, f.force);
    }
    out.push_back(ToString(m));
  }
  WriteFile(f.out, false, [&](std::ostream& o) {
    for (const auto& l : out) o << l << "\n";
  });
  return 0;
}

struct EvalFlags {
  std::string params;
  std::string circuit;
  std::string in = "-";
  std::string out = "-";
};

template <typename Ops, typename Parse>
std::vector<std::string> EvalWith(const ArithCircuit& c, const std::vector<std::string>& lines,
                                  const Ops& ops, const CapacityLimits& limits, Parse parse) {
  std::vector<typename Ops::Ciphertext> in;
  for (const auto& l : lines) in.push_back(parse(l));
  std::vector<std::string> out;
  for (const auto& ct : EvaluateChecked<Ops>(c, in, ops, limits)) out.push_back(FormatCiphertext(ct));
  return out;
}

int EvalCmd(const EvalFlags& f, const Global&) {
  const KeyBundle keys = LoadKeys(f.params);
  const ArithCircuit circuit = ParseCircuit(Slurp(f.circuit));
  const auto lines = LoadLines(f.in);
  const CapacityLimits limits = LimitsFor(keys.params);
  std::vector<std::string> out;
  if (keys.scalar) {
    out = EvalWith(circuit, lines, ScalarOps{keys.scalar->pp}, limits,
                   [](const std::string& l) { return ParseScalarCiphertext(l); });
  } else if (keys.vector) {
    out = EvalWith(circuit, lines, VectorOps{keys.vector->pp}, limits,
                   [](const std::string& l) { return ParseVectorCiphertext(l); });
  } else {
    out = EvalWith(circuit, lines, CrtOps{keys.crt->pp}, limits,
                   [](const std::string& l) { return ParseCrtCiphertext(l); });
  }
  WriteFile(f.out, false, [&](std::ostream& o) {
    for (const auto& l : out) o << l << "\n";
  });
  return 0;
}

struct PipelineFlags {
  int count = 24000;
  int workers = 1;
  int repetitions = 5;
  std::string out = "-";
  bool timings = false;
};

ParameterSet PipelineParams(ParamFlags f, const PipelineFlags& pf, const Global& g) {
  if (f.preset.empty()) {
    const bool noisy = !f.scheme.empty() && IsNoisy(ParseScheme(f.scheme).scheme);
    if (!f.rho) f.rho = noisy ? 8 : 32;
    if (!f.n_bits) f.n_bits = CeilLog2(Int(std::max(1, pf.count / f.d)));
  }
  return Resolve(f, g);
}

void EmitPipeline(std::ostream& o, const PipelineReport& r, bool timings, const Global& g) {
  if (g.json()) {
    o << r.ToJsonLine(timings) << "\n";
  } else {
    o << r.Format(timings);
  }
}

int PipelineCmd(const ParamFlags& f, const PipelineFlags& pf, const Global& g) {
  const ParameterSet ps = PipelineParams(f, pf, g);
  PipelineJob job{ps, pf.count, ps.d, g.seed.value_or(1), pf.workers, pf.repetitions};
  const auto report = RunPipeline(job);
  WriteFile(pf.out, false, [&](std::ostream& o) { EmitPipeline(o, report, pf.timings, g); });
  return 0;
}

int BenchCmd(ParamFlags f, const PipelineFlags& pf, const Global& g) {
  std::vector<PipelineReport> reports;
  for (const char* scheme : {"he1", "he2", "he1n", "he2n"}) {
    f.scheme = scheme;
    f.preset.clear();
    const ParameterSet ps = PipelineParams(f, pf, g);
    reports.push_back(RunPipeline({ps, pf.count, ps.d, g.seed.value_or(1), pf.workers, pf.repetitions}));
  }
  bool all = true;
  WriteFile(pf.out, false, [&](std::ostream& o) {
    for (const auto& r : reports) {
      if (g.json()) {
        o << r.ToJsonLine() << "\n";
      } else {
        o << r.scheme << ": per-Mult " << r.timings.per_mult_us << " us, per-Add "
          << r.timings.per_add_us << " us, Enc " << r.timings.encrypt_us << " us\n";
      }
    }
    for (const auto& c : RelativeBench(reports)) {
      all = all && c.holds;
      if (g.json()) {
        o << nlohmann::json{{"claim", c.claim}, {"ratio", c.ratio}, {"holds", c.holds}}.dump() << "\n";
      } else {
        o << (c.holds ? "holds " : "FAILS ") << c.claim << " (ratio " << c.ratio << ")\n";
      }
    }
  });
  if (!all) throw Error(ErrorCategory::kVerificationMismatch, "an ordinal cost claim did not hold");
  return 0;
}

struct AttackFlags {
  std::string params;
  std::string key;
  std::string in = "-";
  std::string plain;
  std::uint64_t budget = 1u << 20;
  int tries = 16;
  double significance = 0.001;
};

int EmitAttack(const AttackReport& r, const Global& g) {
  if (g.json()) {
    std::cout << r.ToJsonLine() << "\n";
  } else {
    std::cout << r.name << ": " << (r.success ? "success" : "failure");
    if (r.p) std::cout << " p=" << ToString(*r.p);
    if (!r.plaintexts.empty()) std::cout << " plaintexts=" << JoinInts(r.plaintexts);
    std::cout << " operations=" << r.operations;
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
  }
  if (!r.applicable) throw InvalidArgument(r.name + " does not apply: " + r.note);
  if (!r.success) throw Error(ErrorCategory::kAttackBudget, r.name + " failed: " + r.note);
  return 0;
}

std::vector<Int> ScalarValues(const std::vector<std::string>& lines) {
  std::vector<Int> out;
  for (const auto& l : lines) out.push_back(ParseScalarCiphertext(l).value);
  return out;
}

std::vector<Vec> VectorValues(const std::vector<std::string>& lines) {
  std::vector<Vec> out;
  for (const auto& l : lines) out.push_back(ParseVectorCiphertext(l).v);
  return out;
}

const VectorPublicParams& NeedVector(const KeyBundle& keys) {
  if (!keys.vector) throw InvalidArgument("this attack targets vector schemes");
  return keys.vector->pp;
}

const ScalarPublicParams& NeedScalar(const KeyBundle& keys) {
  if (!keys.scalar) throw InvalidArgument("this attack targets HE1/HE1N");
  return keys.scalar->pp;
}

int AttackBrute(const AttackFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.params);
  const auto cts = ScalarValues(LoadLines(f.in));
  return EmitAttack(BruteForceGcd(cts, NeedScalar(keys).pq, keys.params.M,
                                  SequentialGuesser(keys.params.M), f.budget),
                    g);
}

int AttackCollision(const AttackFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.params);
  return EmitAttack(CollisionAttack(ScalarValues(LoadLines(f.in)), NeedScalar(keys).pq, keys.params.M), g);
}

int AttackKnown(const AttackFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.params);
  const auto& pp = NeedVector(keys);
  const auto cts = VectorValues(LoadLines(f.in));
  const auto plain = LoadLines(f.plain);
  if (plain.size() != cts.size()) throw InvalidArgument("need one plaintext per ciphertext");
  std::vector<KnownPair> pairs;
  for (std::size_t i = 0; i < cts.size(); ++i) pairs.push_back({cts[i], ParseInt(plain[i])});
  if (static_cast<int>(pairs.size()) < pp.k) throw InvalidArgument("need at least k known pairs");
  const std::span<const KnownPair> all(pairs);
  const AttackReport r = pp.k == 2 ? He2TwoPlaintextAttack(pairs[0], pairs[1], pp.pq, all.subspan(2))
                                   : HekKnownPlaintextAttack(all.first(pp.k), pp.k, pp.pq,
                                                             all.subspan(pp.k));
  return EmitAttack(r, g);
}

int AttackZero(const AttackFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.params);
  return EmitAttack(ZeroDeterminantAttack(VectorValues(LoadLines(f.in)), NeedVector(keys).pq), g);
}

int AttackAssociator(const AttackFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.params);
  return EmitAttack(AssociatorAttack(VectorValues(LoadLines(f.in)), NeedVector(keys), f.budget), g);
}

// Simulated decryption oracle built from a secret key.
int AttackOracle(const AttackFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.key);
  if (!keys.has_secret || !keys.scalar) throw InvalidArgument("needs an HE1/HE1N secret key");
  auto rng = MakeRng(g);
  const Int p = keys.scalar->sk.p;
  return EmitAttack(FactorViaDecryptionOracle([&](const Int& c) { return Mod(c, p); },
                                              keys.scalar->pp.pq, *rng, f.tries),
                    g);
}

int AttackUniformity(const AttackFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.key);
  std::optional<Int> kappa;
  if (keys.scalar) kappa = keys.scalar->sk.kappa;
  if (keys.vector) kappa = keys.vector->sk.kappa;
  if (keys.crt) kappa = keys.crt->sk.kappa;
  if (!keys.has_secret || !kappa) throw InvalidArgument("needs a noisy secret key (for kappa)");
  std::vector<Int> values;
  for (const auto& l : LoadLines(f.in)) {
    values.push_back(keys.scalar ? ParseScalarCiphertext(l).value : ParseVectorCiphertext(l).v.at(0));
  }
  const auto r = UniformityTest(values, *kappa, f.significance);
  if (g.json()) {
    std::cout << nlohmann::json{{"test", "uniformity"},
                                {"applicable", r.applicable},
                                {"pass", r.pass()},
                                {"statistic", r.chi.statistic},
                                {"dof", r.chi.dof},
                                {"critical", r.chi.critical},
                                {"samples", r.samples}}
                     .dump()
              << "\n";
  } else {
    std::cout << "uniformity: " << (r.pass() ? "pass" : "reject") << " chi2=" << r.chi.statistic
              << " critical=" << r.chi.critical << " dof=" << r.chi.dof << " samples=" << r.samples
              << "\n";
  }
  if (!r.pass()) throw Error(ErrorCategory::kVerificationMismatch, "c mod kappa is not uniform");
  return 0;
}

struct FheFlags {
  std::string key;
  std::string netlist;
  int adder = 0;
  std::string inputs;
  std::string program;
  std::string secrets;
  std::string ciphertexts;
  std::string in = "-";
  std::string out = "-";
  bool allow_reuse = false;
};

int FheCompile(const FheFlags& f, const Global& g) {
  const KeyBundle keys = LoadKeys(f.key);
  if (!keys.has_secret || !keys.vector || !keys.vector->sk.kappa || keys.vector->sk.k < 3) {
    throw InvalidArgument("needs an FHE secret key (keygen --fhe)");
  }
  const FheKey key{*keys.vector, *keys.vector->sk.kappa};
  if (f.netlist.empty() == (f.adder == 0)) throw InvalidArgument("give exactly one of --netlist, --adder");
  const BoolNetlist net = f.adder ? RippleCarryAdder(f.adder) : ParseBoolNetlist(Slurp(f.netlist));
  auto rng = MakeRng(g);
  const Compilation comp = CompileBooleanCircuit(net, key, *rng);
  WriteFile(f.program, false, [&](std::ostream& o) { WriteCompiledCircuit(o, comp.circuit); });
  if (!f.secrets.empty()) {
    WriteFile(f.secrets, true, [&](std::ostream& o) { WriteCompileSecrets(o, comp.secrets); });
  }
  if (!f.inputs.empty()) {
    if (f.inputs.size() != net.inputs.size()) {
      throw InvalidArgument("--inputs needs " + std::to_string(net.inputs.size()) + " bits");
    }
    std::unique_ptr<bool[]> bits(new bool[f.inputs.size()]);
    for (std::size_t i = 0; i < f.inputs.size(); ++i) {
      if (f.inputs[i] != '0' && f.inputs[i] != '1') throw InvalidArgument("--inputs takes 0/1 digits");
      bits[i] = f.inputs[i] == '1';
    }
    const auto cts = FheEncryptInputs(std::span<const bool>(bits.get(), f.inputs.size()),
                                      comp.secrets, key, *rng);
    WriteFile(f.ciphertexts.empty() ? "-" : f.ciphertexts, false, [&](std::ostream& o) {
      for (const auto& c : cts) o << FormatCiphertext(c) << "\n";
    });
  }
  return 0;
}

int FheEval(const FheFlags& f, const Global&) {
  CompiledCircuit cc = [&] {
    auto in = OpenIn(f.program);
    return ReadCompiledCircuit(in);
  }();
  std::vector<VectorCiphertext> inputs;
  for (const auto& l : LoadLines(f.in)) inputs.push_back(ParseVectorCiphertext(l));
  const FheTrace trace = FheEvaluate(cc, inputs, f.allow_reuse);
  // Persist the use count so a second run needs --allow-reuse.
  WriteFile(f.program, false, [&](std::ostream& o) { WriteCompiledCircuit(o, cc); });
  WriteFile(f.out, false, [&](std::ostream& o) {
    for (const auto& c : trace.outputs) o << (c.v.empty() ? "-" : FormatCiphertext(c)) << "\n";
  });
  return 0;
}

int Run(int argc, char** argv, Global& g) {
  CLI::App app{"intfhe: somewhat homomorphic encryption over the integers"};
  app.require_subcommand(1);
  app.add_option("--seed", g.seed, "deterministic randomness (tests and reproducible runs)");
  app.add_option("--report", g.report, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_flag("--insecure-toy", g.insecure_toy, "acknowledge parameters below the security margins");
  app.fallthrough();

  ParamFlags pflags;
  KeygenFlags kflags;
  IoFlags ioflags;
  EvalFlags eflags;
  PipelineFlags plflags;
  AttackFlags aflags;
  FheFlags fflags;

  auto* params = app.add_subcommand("params", "parameter derivation");
  params->require_subcommand(1);
  auto* derive = params->add_subcommand("derive", "derive lambda and eta");
  pflags.Attach(derive);
  auto* list = params->add_subcommand("list", "list presets");
  list->add_option("--preset-file", pflags.preset_file);

  auto* keygen = app.add_subcommand("keygen", "generate keys");
  pflags.Attach(keygen);
  keygen->add_option("--secret", kflags.secret_path, "secret key file (mode 0600)")->required();
  keygen->add_option("--public", kflags.public_path, "public parameter file");
  keygen->add_flag("--fhe", kflags.fhe, "Boolean FHE key (HEk, k >= 3; needs --lambda --eta)");

  auto* encrypt = app.add_subcommand("encrypt", "encrypt integers, one per line");
  encrypt->add_option("--key", ioflags.key)->required();
  encrypt->add_option("--in", ioflags.in);
  encrypt->add_option("--out", ioflags.out);

  auto* decrypt = app.add_subcommand("decrypt", "decrypt ciphertexts, one per line");
  decrypt->add_option("--key", ioflags.key)->required();
  decrypt->add_option("--in", ioflags.in);
  decrypt->add_option("--out", ioflags.out);
  decrypt->add_flag("--force", ioflags.force, "decrypt even when the bound reached p");
  decrypt->add_option("--fhe-program", ioflags.fhe_program, "decrypt Boolean outputs of this program");

  auto* eval = app.add_subcommand("eval", "evaluate an arithmetic circuit on ciphertexts");
  eval->add_option("--params", eflags.params, "public parameter (or secret key) file")->required();
  eval->add_option("--circuit", eflags.circuit)->required();
  eval->add_option("--in", eflags.in);
  eval->add_option("--out", eflags.out);

  auto* pipeline = app.add_subcommand("pipeline", "encrypted inner-product pipeline");
  pflags.Attach(pipeline);
  pipeline->add_option("--count", plflags.count, "total inputs");
  pipeline->add_option("--workers", plflags.workers)->check(CLI::PositiveNumber);
  pipeline->add_option("--repetitions", plflags.repetitions)->check(CLI::PositiveNumber);
  pipeline->add_option("--out", plflags.out);
  pipeline->add_flag("--timings", plflags.timings, "include stage timings (not reproducible)");

  auto* bench = app.add_subcommand("bench", "relative per-operation costs");
  pflags.Attach(bench);
  bench->add_option("--count", plflags.count);
  bench->add_option("--workers", plflags.workers)->check(CLI::PositiveNumber);
  bench->add_option("--repetitions", plflags.repetitions)->check(CLI::PositiveNumber);
  bench->add_option("--out", plflags.out);

  auto* attack = app.add_subcommand("attack", "cryptanalysis");
  attack->require_subcommand(1);
  auto attack_sub = [&](const char* name, const char* help, bool needs_params, bool needs_key) {
    auto* s = attack->add_subcommand(name, help);
    auto* p = s->add_option("--params", aflags.params, "public parameter file");
    if (needs_params) p->required();
    auto* k = s->add_option("--key", aflags.key, "secret key file");
    if (needs_key) k->required();
    s->add_option("--in", aflags.in, "ciphertext file");
    return s;
  };
  auto* brute = attack_sub("brute-force", "gcd brute force over plaintext guesses", true, false);
  brute->add_option("--budget", aflags.budget);
  auto* collision = attack_sub("collision", "pairwise-difference gcd", true, false);
  auto* known = attack_sub("known-plaintext", "k known plaintexts reveal p and gamma", true, false);
  known->add_option("--plain", aflags.plain, "plaintexts, one per ciphertext")->required();
  auto* zero = attack_sub("zero", "determinant of k encryptions of zero", true, false);
  auto* assoc = attack_sub("associator", "associators as zero encryptions", true, false);
  assoc->add_option("--budget", aflags.budget);
  auto* oracle = attack_sub("decryption-oracle", "factor pq with a decryption oracle", false, true);
  oracle->add_option("--tries", aflags.tries);
  auto* uniform = attack_sub("uniformity", "chi-square test of c mod kappa", false, true);
  uniform->add_option("--significance", aflags.significance);

  auto* fcompile = app.add_subcommand("fhe-compile", "compile a Boolean netlist");
  fcompile->add_option("--key", fflags.key, "FHE secret key")->required();
  fcompile->add_option("--netlist", fflags.netlist);
  fcompile->add_option("--adder", fflags.adder, "use an N-bit ripple-carry adder");
  fcompile->add_option("--program", fflags.program, "public program file")->required();
  fcompile->add_option("--secrets", fflags.secrets, "wire encodings (mode 0600)");
  fcompile->add_option("--inputs", fflags.inputs, "input bits, e.g. 0110");
  fcompile->add_option("--ciphertexts", fflags.ciphertexts, "encrypted inputs");

  auto* feval = app.add_subcommand("fhe-eval", "evaluate a compiled program once");
  feval->add_option("--program", fflags.program)->required();
  feval->add_option("--in", fflags.in);
  feval->add_option("--out", fflags.out);
  feval->add_flag("--allow-reuse", fflags.allow_reuse, "evaluate again (leaks p)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*derive) return ParamsDerive(pflags, g);
  if (*list) return ParamsList(pflags, g);
  if (*keygen) return Keygen(pflags, kflags, g);
  if (*encrypt) return EncryptCmd(ioflags, g);
  if (*decrypt) return DecryptCmd(ioflags, g);
  if (*eval) return EvalCmd(eflags, g);
  if (*pipeline) return PipelineCmd(pflags, plflags, g);
  if (*bench) return BenchCmd(pflags, plflags, g);
  if (*brute) return AttackBrute(aflags, g);
  if (*collision) return AttackCollision(aflags, g);
  if (*known) return AttackKnown(aflags, g);
  if (*zero) return AttackZero(aflags, g);
  if (*assoc) return AttackAssociator(aflags, g);
  if (*oracle) return AttackOracle(aflags, g);
  if (*uniform) return AttackUniformity(aflags, g);
  if (*fcompile) return FheCompile(fflags, g);
  if (*feval) return FheEval(fflags, g);
  return 2;
}

}  // namespace
}  // namespace intfhe

int main(int argc, char** argv) {
  intfhe::Global g;
  try {
    return intfhe::Run(argc, argv, g);
  } catch (const intfhe::Error& e) {
    if (g.json()) {
      std::cerr << nlohmann::json{{"error", intfhe::CategoryName(e.category())}, {"message", e.what()}}.dump()
                << "\n";
    } else {
      std::cerr << "error[" << intfhe::CategoryName(e.category()) << "]: " << e.what() << "\n";
    }
    return intfhe::ExitCode(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
}

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

#include "intfhe/io.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "intfhe/errors.h"
#include "intfhe/random.h"

namespace intfhe {
namespace {

Error ParseError(const std::string& what) { return Error(ErrorCategory::kParse, what); }

int ToInt(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + s + "'");
  }
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void PutParams(KvFile& f, const ParameterSet& ps) {
  f.fields["scheme"] = SchemeName(ps.scheme, ps.k);
  f.fields["d"] = std::to_string(ps.d);
  f.fields["n_bits"] = std::to_string(ps.n_bits);
  f.fields["n"] = ToString(ps.n);
  f.fields["M"] = ToString(ps.M);
  f.fields["rho"] = std::to_string(ps.rho);
  f.fields["rho_prime"] = std::to_string(ps.rho_prime);
  f.fields["lambda"] = std::to_string(ps.lambda);
  f.fields["eta"] = std::to_string(ps.eta);
  f.fields["kappa_bits"] = std::to_string(ps.kappa_bits);
  f.fields["k"] = std::to_string(ps.k);
  f.fields["K"] = std::to_string(ps.K);
  f.fields["insecure_toy"] = ps.insecure_toy ? "1" : "0";
}

ParameterSet GetParams(const KvFile& f) {
  ParameterSet ps;
  const SchemeSpec spec = ParseScheme(f.Get("scheme"));
  ps.scheme = spec.scheme;
  ps.d = ToInt(f.Get("d"));
  ps.n_bits = ToInt(f.Get("n_bits"));
  ps.n = ParseInt(f.Get("n"));
  ps.M = ParseInt(f.Get("M"));
  ps.rho = ToInt(f.Get("rho"));
  ps.rho_prime = ToInt(f.Get("rho_prime"));
  ps.lambda = ToInt(f.Get("lambda"));
  ps.eta = ToInt(f.Get("eta"));
  ps.kappa_bits = ToInt(f.Get("kappa_bits"));
  ps.k = ToInt(f.Get("k"));
  ps.K = ToInt(f.Get("K"));
  ps.insecure_toy = f.Get("insecure_toy") == "1";
  return ps;
}

void PutMatrix(KvFile& f, const std::string& prefix, const ModMatrix& m) {
  f.fields[prefix + ".rows"] = std::to_string(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) f.fields[prefix + "." + std::to_string(r)] = JoinInts(m.Row(r));
}

ModMatrix GetMatrix(const KvFile& f, const std::string& prefix) {
  const int rows = ToInt(f.Get(prefix + ".rows"));
  std::vector<Vec> data;
  for (int r = 0; r < rows; ++r) data.push_back(SplitInts(f.Get(prefix + "." + std::to_string(r))));
  const std::size_t cols = data.empty() ? 0 : data[0].size();
  ModMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (data[r].size() != cols) throw ParseError(prefix + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = data[r][c];
  }
  return m;
}

void PutVectorPublic(KvFile& f, const std::string& prefix, const VectorPublicParams& pp) {
  f.fields[prefix + "k"] = std::to_string(pp.k);
  f.fields[prefix + "pq"] = ToString(pp.pq);
  f.fields[prefix + "capacity"] = ToString(pp.capacity);
  f.fields[prefix + "pairs"] = kPairOrderTag;
  f.fields[prefix + "signed"] = pp.signed_mode ? "1" : "0";
  PutMatrix(f, prefix + "R", pp.R);
}

VectorPublicParams GetVectorPublic(const KvFile& f, const std::string& prefix) {
  if (f.Get(prefix + "pairs") != kPairOrderTag) {
    throw ParseError("unsupported augmentation pair order '" + f.Get(prefix + "pairs") + "'");
  }
  VectorPublicParams pp;
  pp.k = ToInt(f.Get(prefix + "k"));
  pp.pq = ParseInt(f.Get(prefix + "pq"));
  pp.capacity = ParseInt(f.Get(prefix + "capacity"));
  pp.signed_mode = f.Get(prefix + "signed") == "1";
  pp.R = GetMatrix(f, prefix + "R");
  if (static_cast<int>(pp.R.rows()) != pp.k ||
      static_cast<int>(pp.R.cols()) != AugmentedSize(pp.k)) {
    throw ParseError("re-encryption matrix has the wrong shape");
  }
  return pp;
}

void PutVectorSecret(KvFile& f, const std::string& prefix, const VectorSecretKey& sk) {
  f.fields[prefix + "p"] = ToString(sk.p);
  f.fields[prefix + "q"] = ToString(sk.q);
  for (int j = 1; j < sk.k; ++j) f.fields[prefix + "a." + std::to_string(j)] = JoinInts(sk.basis[j]);
  f.fields[prefix + "gamma"] = JoinInts(sk.gamma);
}

VectorSecretKey GetVectorSecret(const KvFile& f, const std::string& prefix, int k) {
  VectorSecretKey sk;
  sk.k = k;
  sk.p = ParseInt(f.Get(prefix + "p"));
  sk.q = ParseInt(f.Get(prefix + "q"));
  sk.basis.emplace_back(k, Int(1));
  for (int j = 1; j < k; ++j) sk.basis.push_back(SplitInts(f.Get(prefix + "a." + std::to_string(j))));
  sk.gamma = SplitInts(f.Get(prefix + "gamma"));
  sk.lambda = static_cast<int>(BitLength(sk.p));
  sk.eta = static_cast<int>(BitLength(sk.q));
  return sk;
}

}  // namespace

const std::string& KvFile::Get(const std::string& key) const {
  auto it = fields.find(key);
  if (it == fields.end()) throw ParseError(kind + " file: missing field '" + key + "'");
  return it->second;
}

std::optional<std::string> KvFile::Find(const std::string& key) const {
  auto it = fields.find(key);
  if (it == fields.end()) return std::nullopt;
  return it->second;
}

void WriteKv(std::ostream& out, const KvFile& file) {
  out << "intfhe " << file.kind << " v" << kFormatVersion << "\n";
  for (const auto& [k, v] : file.fields) out << k << "=" << v << "\n";
  out << "end\n";
}

KvFile ReadKv(std::istream& in) {
  KvFile file;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty file");
  std::istringstream header(line);
  std::string magic, version;
  header >> magic >> file.kind >> version;
  if (magic != "intfhe" || file.kind.empty()) throw ParseError("not an intfhe file");
  if (version != "v" + std::to_string(kFormatVersion)) {
    throw ParseError("unsupported format version '" + version + "'");
  }
  while (std::getline(in, line)) {
    if (line == "end") return file;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + line + "'");
    file.fields[line.substr(0, eq)] = line.substr(eq + 1);
  }
  throw ParseError(file.kind + " file: missing 'end'");
}

std::string JoinInts(const std::vector<Int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += ToString(v[i]);
  }
  return out;
}

Vec SplitInts(std::string_view text, char sep) {
  Vec out;
  for (const auto& part : Split(text, sep)) out.push_back(ParseInt(part));
  return out;
}

KeyBundle GenerateKeys(const ParameterSet& params, RandomSource& rng) {
  KeyBundle keys;
  keys.params = params;
  keys.has_secret = true;
  if (params.scheme == Scheme::kHE2NCRT) {
    keys.crt = CrtKeygen(params, rng);
  } else if (IsVector(params.scheme)) {
    keys.vector = BuildKeys(params, rng);
  } else {
    keys.scalar = ScalarKeygen(params, rng);
  }
  return keys;
}

namespace {

KvFile Serialize(const KeyBundle& keys, bool secret) {
  if (secret && !keys.has_secret) throw InvalidArgument("bundle holds no secret key");
  KvFile f;
  f.kind = secret ? "secret-key" : "public-params";
  PutParams(f, keys.params);
  if (keys.scalar) {
    const auto& [sk, pp] = *keys.scalar;
    f.fields["pq"] = ToString(pp.pq);
    f.fields["capacity"] = ToString(pp.capacity);
    f.fields["signed"] = pp.signed_mode ? "1" : "0";
    if (secret) {
      f.fields["p"] = ToString(sk.p);
      f.fields["q"] = ToString(sk.q);
      f.fields["plain_bound"] = ToString(sk.M);
      if (sk.kappa) f.fields["kappa"] = ToString(*sk.kappa);
    }
  } else if (keys.vector) {
    PutVectorPublic(f, "", keys.vector->pp);
    if (secret) {
      const auto& sk = keys.vector->sk;
      PutVectorSecret(f, "", sk);
      f.fields["plain_bound"] = ToString(sk.M);
      if (sk.kappa) f.fields["kappa"] = ToString(*sk.kappa);
    }
  } else if (keys.crt) {
    const auto& [sk, pp] = *keys.crt;
    f.fields["shards"] = std::to_string(pp.K());
    f.fields["capacity"] = ToString(pp.capacity);
    for (int j = 0; j < pp.K(); ++j) {
      const std::string prefix = "shard." + std::to_string(j) + ".";
      PutVectorPublic(f, prefix, pp.shards[j]);
      if (secret) PutVectorSecret(f, prefix, sk.shards[j]);
    }
    if (secret) {
      f.fields["kappa"] = ToString(sk.kappa);
      f.fields["plain_bound"] = ToString(sk.M);
    }
  } else {
    throw InvalidArgument("empty key bundle");
  }
  return f;
}

}  // namespace

void WriteSecretKey(std::ostream& out, const KeyBundle& keys) { WriteKv(out, Serialize(keys, true)); }

void WritePublicParams(std::ostream& out, const KeyBundle& keys) {
  WriteKv(out, Serialize(keys, false));
}

KeyBundle ReadKeys(std::istream& in) {
  const KvFile f = ReadKv(in);
  if (f.kind != "secret-key" && f.kind != "public-params") {
    throw ParseError("expected a key file, got '" + f.kind + "'");
  }
  KeyBundle keys;
  keys.params = GetParams(f);
  keys.has_secret = f.kind == "secret-key";
  const ParameterSet& ps = keys.params;
  const bool toy = ps.insecure_toy;
  std::optional<Int> kappa;
  if (auto k = f.Find("kappa")) kappa = ParseInt(*k);
  const Int plain_bound = f.Find("plain_bound") ? ParseInt(f.Get("plain_bound")) : ps.M;

  if (ps.scheme == Scheme::kHE2NCRT) {
    CrtKeys crt;
    const int K = ToInt(f.Get("shards"));
    crt.pp.capacity = ParseInt(f.Get("capacity"));
    for (int j = 0; j < K; ++j) {
      const std::string prefix = "shard." + std::to_string(j) + ".";
      crt.pp.shards.push_back(GetVectorPublic(f, prefix));
      crt.pp.shards.back().insecure_toy = toy;
    }
    if (keys.has_secret) {
      crt.sk.kappa = *kappa;
      crt.sk.M = plain_bound;
      crt.sk.Pi = 1;
      crt.sk.insecure_toy = toy;
      for (int j = 0; j < K; ++j) {
        VectorSecretKey s = GetVectorSecret(f, "shard." + std::to_string(j) + ".", 2);
        s.kappa = kappa;
        s.M = plain_bound;
        s.insecure_toy = toy;
        crt.sk.Pi *= s.p;
        crt.sk.shards.push_back(std::move(s));
      }
      for (const auto& s : crt.sk.shards) {
        const Int Mj = crt.sk.Pi / s.p;
        crt.sk.weights.push_back(Mj);
        crt.sk.mu.push_back(*ModInverse(Mj, s.p));
      }
    }
    keys.crt = std::move(crt);
  } else if (IsVector(ps.scheme)) {
    VectorKeys vk;
    vk.pp = GetVectorPublic(f, "");
    vk.pp.insecure_toy = toy;
    if (keys.has_secret) {
      vk.sk = GetVectorSecret(f, "", vk.pp.k);
      vk.sk.kappa = kappa;
      vk.sk.M = plain_bound;
      vk.sk.signed_mode = vk.pp.signed_mode;
      vk.sk.insecure_toy = toy;
    }
    keys.vector = std::move(vk);
  } else {
    ScalarKeys sk;
    sk.pp.pq = ParseInt(f.Get("pq"));
    sk.pp.capacity = ParseInt(f.Get("capacity"));
    sk.pp.signed_mode = f.Get("signed") == "1";
    sk.pp.insecure_toy = toy;
    if (keys.has_secret) {
      sk.sk.p = ParseInt(f.Get("p"));
      sk.sk.q = ParseInt(f.Get("q"));
      sk.sk.kappa = kappa;
      sk.sk.M = plain_bound;
      sk.sk.signed_mode = sk.pp.signed_mode;
      sk.sk.lambda = ps.lambda;
      sk.sk.eta = ps.eta;
      sk.sk.insecure_toy = toy;
    }
    keys.scalar = std::move(sk);
  }
  return keys;
}

namespace {

std::pair<std::string, Int> SplitBound(std::string_view line) {
  const auto colon = line.rfind(':');
  if (colon == std::string_view::npos) throw ParseError("ciphertext line lacks ':bound'");
  return {std::string(line.substr(0, colon)), ParseInt(std::string(line.substr(colon + 1)))};
}

}  // namespace

std::string FormatCiphertext(const ScalarCiphertext& c) {
  return ToString(c.value) + ":" + ToString(c.bound);
}

std::string FormatCiphertext(const VectorCiphertext& c) { return JoinInts(c.v) + ":" + ToString(c.bound); }

std::string FormatCiphertext(const CrtCiphertext& c) {
  std::string out;
  for (std::size_t j = 0; j < c.shards.size(); ++j) {
    if (j) out += '|';
    out += JoinInts(c.shards[j]);
  }
  return out + ":" + ToString(c.bound);
}

ScalarCiphertext ParseScalarCiphertext(std::string_view line) {
  auto [body, bound] = SplitBound(line);
  return ScalarCiphertext{ParseInt(body), bound};
}

VectorCiphertext ParseVectorCiphertext(std::string_view line) {
  auto [body, bound] = SplitBound(line);
  return VectorCiphertext{SplitInts(body), bound};
}

CrtCiphertext ParseCrtCiphertext(std::string_view line) {
  auto [body, bound] = SplitBound(line);
  CrtCiphertext c;
  c.bound = bound;
  for (const auto& part : Split(body, '|')) c.shards.push_back(SplitInts(part));
  return c;
}

std::vector<std::string> ReadLines(std::istream& in) {
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

void WriteShardJob(std::ostream& out, const ShardJob& job) {
  KvFile f;
  f.kind = "shard-job";
  f.fields["shard"] = std::to_string(job.shard);
  f.fields["inputs"] = std::to_string(job.inputs.size());
  PutVectorPublic(f, "", job.pp);
  WriteKv(out, f);
  for (const auto& c : job.inputs) out << FormatCiphertext(c) << "\n";
}

ShardJob ReadShardJob(std::istream& in) {
  const KvFile f = ReadKv(in);
  if (f.kind != "shard-job") throw ParseError("expected a shard-job file");
  ShardJob job;
  job.shard = ToInt(f.Get("shard"));
  job.pp = GetVectorPublic(f, "");
  const int n = ToInt(f.Get("inputs"));
  for (const auto& line : ReadLines(in)) job.inputs.push_back(ParseVectorCiphertext(line));
  if (static_cast<int>(job.inputs.size()) != n) throw ParseError("shard job input count mismatch");
  return job;
}

void WriteCompiledCircuit(std::ostream& out, const CompiledCircuit& cc) {
  KvFile f;
  f.kind = "fhe-program";
  PutVectorPublic(f, "", cc.pp);
  f.fields["wire_bound"] = ToString(cc.wire_bound);
  f.fields["evaluations"] = std::to_string(cc.evaluations);
  std::istringstream net(FormatBoolNetlist(cc.netlist));
  int i = 0;
  for (std::string line; std::getline(net, line); ++i) f.fields["net." + std::to_string(i)] = line;
  f.fields["net.lines"] = std::to_string(i);
  f.fields["edges"] = std::to_string(cc.edges.size());
  for (std::size_t e = 0; e < cc.edges.size(); ++e) {
    const Edge& edge = cc.edges[e];
    std::string progs;
    for (std::size_t j = 0; j < cc.programs[e].size(); ++j) {
      if (j) progs += ';';
      progs += FormatCiphertext(cc.programs[e][j]);
    }
    f.fields["edge." + std::to_string(e)] = std::to_string(edge.source) + " " +
                                            std::to_string(edge.consumer) + " " +
                                            std::to_string(edge.slot) + " " + progs;
  }
  WriteKv(out, f);
}

CompiledCircuit ReadCompiledCircuit(std::istream& in) {
  const KvFile f = ReadKv(in);
  if (f.kind != "fhe-program") throw ParseError("expected an fhe-program file");
  CompiledCircuit cc;
  cc.pp = GetVectorPublic(f, "");
  cc.wire_bound = ParseInt(f.Get("wire_bound"));
  if (auto ev = f.Find("evaluations")) cc.evaluations = ToInt(*ev);
  std::string text;
  const int lines = ToInt(f.Get("net.lines"));
  for (int i = 0; i < lines; ++i) text += f.Get("net." + std::to_string(i)) + "\n";
  cc.netlist = ParseBoolNetlist(text);
  const std::size_t n = cc.netlist.nodes.size();
  cc.out_edges.assign(n, {});
  cc.in_edges.assign(n, {-1, -1});
  cc.output_edges.assign(cc.netlist.outputs.size(), -1);
  const int edges = ToInt(f.Get("edges"));
  for (int e = 0; e < edges; ++e) {
    std::istringstream ws(f.Get("edge." + std::to_string(e)));
    Edge edge;
    std::string progs;
    if (!(ws >> edge.source >> edge.consumer >> edge.slot >> progs)) throw ParseError("bad edge record");
    if (edge.source < 0 || edge.source >= static_cast<int>(n) || edge.consumer >= static_cast<int>(n)) {
      throw ParseError("edge references an unknown node");
    }
    cc.edges.push_back(edge);
    cc.out_edges[edge.source].push_back(e);
    if (edge.consumer >= 0) {
      cc.in_edges[edge.consumer].at(edge.slot) = e;
    } else {
      cc.output_edges.at(edge.slot) = e;
    }
    std::vector<VectorCiphertext> prog;
    for (const auto& part : Split(progs, ';')) prog.push_back(ParseVectorCiphertext(part));
    cc.programs.push_back(std::move(prog));
  }
  return cc;
}

void WriteCompileSecrets(std::ostream& out, const CompileSecrets& secrets) {
  KvFile f;
  f.kind = "fhe-secrets";
  f.fields["inputs"] = std::to_string(secrets.input_encodings.size());
  for (std::size_t i = 0; i < secrets.input_encodings.size(); ++i) {
    const auto& e = secrets.input_encodings[i];
    f.fields["input." + std::to_string(i)] = ToString(e.w0) + "," + ToString(e.w1);
  }
  f.fields["edges"] = std::to_string(secrets.edge_encodings.size());
  for (std::size_t i = 0; i < secrets.edge_encodings.size(); ++i) {
    const auto& e = secrets.edge_encodings[i];
    f.fields["edge." + std::to_string(i)] = ToString(e.w0) + "," + ToString(e.w1);
  }
  WriteKv(out, f);
}

CompileSecrets ReadCompileSecrets(std::istream& in) {
  const KvFile f = ReadKv(in);
  if (f.kind != "fhe-secrets") throw ParseError("expected an fhe-secrets file");
  CompileSecrets s;
  auto encoding = [](const std::string& text) {
    const Vec v = SplitInts(text);
    if (v.size() != 2) throw ParseError("encoding needs two values");
    return Encoding{v[0], v[1]};
  };
  const int inputs = ToInt(f.Get("inputs"));
  for (int i = 0; i < inputs; ++i) s.input_encodings.push_back(encoding(f.Get("input." + std::to_string(i))));
  const int edges = ToInt(f.Get("edges"));
  for (int i = 0; i < edges; ++i) s.edge_encodings.push_back(encoding(f.Get("edge." + std::to_string(i))));
  return s;
}

}  // namespace intfhe

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

#ifndef INTFHE_IO_H_
#define INTFHE_IO_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intfhe/boolean.h"
#include "intfhe/crt.h"
#include "intfhe/params.h"
#include "intfhe/scalar.h"
#include "intfhe/vector.h"

namespace intfhe {

inline constexpr int kFormatVersion = 1;

// Versioned key=value text: a header line `intfhe <kind> v<version>` then
// one field per line.
struct KvFile {
  std::string kind;
  std::map<std::string, std::string> fields;

  const std::string& Get(const std::string& key) const;
  std::optional<std::string> Find(const std::string& key) const;
};

void WriteKv(std::ostream& out, const KvFile& file);
KvFile ReadKv(std::istream& in);

std::string JoinInts(const std::vector<Int>& v, char sep = ',');
Vec SplitInts(std::string_view text, char sep = ',');

// Keys for any scheme. The secret file is self-sufficient: it also carries the
// public fields. The public file never carries p, q, kappa, basis vectors,
// gamma or structure constants.
struct KeyBundle {
  ParameterSet params;
  std::optional<ScalarKeys> scalar;
  std::optional<VectorKeys> vector;
  std::optional<CrtKeys> crt;
  bool has_secret = false;
};

KeyBundle GenerateKeys(const ParameterSet& params, RandomSource& rng);

void WriteSecretKey(std::ostream& out, const KeyBundle& keys);
void WritePublicParams(std::ostream& out, const KeyBundle& keys);
KeyBundle ReadKeys(std::istream& in);

// Ciphertext lines: `value:bound`, `v1,v2,...:bound`, `a,b|c,d|...:bound`.
std::string FormatCiphertext(const ScalarCiphertext& c);
std::string FormatCiphertext(const VectorCiphertext& c);
std::string FormatCiphertext(const CrtCiphertext& c);
ScalarCiphertext ParseScalarCiphertext(std::string_view line);
VectorCiphertext ParseVectorCiphertext(std::string_view line);
CrtCiphertext ParseCrtCiphertext(std::string_view line);

// Non-empty, non-comment lines.
std::vector<std::string> ReadLines(std::istream& in);

struct ShardJob {
  int shard = 0;
  VectorPublicParams pp;
  std::vector<VectorCiphertext> inputs;
};

void WriteShardJob(std::ostream& out, const ShardJob& job);
ShardJob ReadShardJob(std::istream& in);

void WriteCompiledCircuit(std::ostream& out, const CompiledCircuit& circuit);
CompiledCircuit ReadCompiledCircuit(std::istream& in);
void WriteCompileSecrets(std::ostream& out, const CompileSecrets& secrets);
CompileSecrets ReadCompileSecrets(std::istream& in);

}  // namespace intfhe

#endif  // INTFHE_IO_H_

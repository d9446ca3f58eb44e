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

#include <gtest/gtest.h>

#include <sstream>

#include "intfhe/errors.h"
#include "intfhe/io.h"
#include "intfhe/random.h"

namespace intfhe {
namespace {

template <typename Fn>
std::string Dump(Fn&& fn) {
  std::ostringstream out;
  fn(out);
  return out.str();
}

bool IsParseError(const std::string& text) {
  std::istringstream in(text);
  try {
    ReadKv(in);
  } catch (const Error& e) {
    return e.category() == ErrorCategory::kParse;
  }
  return false;
}

TEST(Kv, RoundTripAndErrors) {
  KvFile f{"thing", {{"a", "1"}, {"b", "x y"}}};
  std::istringstream in(Dump([&](std::ostream& o) { WriteKv(o, f); }));
  const auto back = ReadKv(in);
  EXPECT_EQ(back.kind, "thing");
  EXPECT_EQ(back.fields, f.fields);
  EXPECT_EQ(back.Get("b"), "x y");
  EXPECT_FALSE(back.Find("c").has_value());
  EXPECT_THROW(back.Get("c"), Error);

  EXPECT_TRUE(IsParseError(""));
  EXPECT_TRUE(IsParseError("hello thing v1\nend\n"));
  EXPECT_TRUE(IsParseError("intfhe thing v9\nend\n"));
  EXPECT_TRUE(IsParseError("intfhe thing v1\nnoequals\nend\n"));
  EXPECT_TRUE(IsParseError("intfhe thing v1\na=1\n"));
}

TEST(Kv, IntLists) {
  const Vec v{Int(0), Int("123456789012345678901234567890"), Int(7)};
  EXPECT_EQ(SplitInts(JoinInts(v)), v);
  EXPECT_EQ(SplitInts(JoinInts(v, '|'), '|'), v);
  EXPECT_THROW(SplitInts("1,x"), Error);
}

struct SchemeCase {
  Scheme scheme;
  int k;
  int K;
};

class KeyFiles : public ::testing::TestWithParam<SchemeCase> {};

TEST_P(KeyFiles, SecretRoundTripDecryptsAndPublicHidesSecrets) {
  const auto [scheme, k, K] = GetParam();
  SeededRandom rng(91);
  const auto params = DeriveParams(scheme, 2, 2, 4, k, K);
  const auto keys = GenerateKeys(params, rng);
  std::istringstream sk_in(Dump([&](std::ostream& o) { WriteSecretKey(o, keys); }));
  const auto back = ReadKeys(sk_in);
  EXPECT_TRUE(back.has_secret);
  EXPECT_EQ(back.params.lambda, params.lambda);

  const std::string pub = Dump([&](std::ostream& o) { WritePublicParams(o, keys); });
  for (const char* secret : {"\np=", "\nq=", "\nkappa=", "\ngamma=", "\na.", "shard.0.p="}) {
    EXPECT_EQ(pub.find(secret), std::string::npos) << secret;
  }
  std::istringstream pub_in(pub);
  const auto pub_keys = ReadKeys(pub_in);
  EXPECT_FALSE(pub_keys.has_secret);
  EXPECT_THROW(WriteSecretKey(std::cout, pub_keys), InvalidArgument);

  for (int t = 0; t < 5; ++t) {
    const Int m = rng.Below(params.M);
    if (keys.scalar) {
      const auto c = Encrypt(m, keys.scalar->sk, keys.scalar->pp, rng);
      const auto c2 = ParseScalarCiphertext(FormatCiphertext(c));
      EXPECT_EQ(c2, c);
      EXPECT_EQ(Decrypt(Mult(c2, c2, pub_keys.scalar->pp), back.scalar->sk), Mod(m * m, back.scalar->sk.kappa.value_or(m * m + 1)));
    } else if (keys.vector) {
      const auto c = Encrypt(m, keys.vector->sk, keys.vector->pp, rng);
      const auto c2 = ParseVectorCiphertext(FormatCiphertext(c));
      EXPECT_EQ(c2, c);
      EXPECT_EQ(pub_keys.vector->pp.R, keys.vector->pp.R);
      const Int expect = back.vector->sk.kappa ? Mod(m * m, *back.vector->sk.kappa) : Int(m * m);
      EXPECT_EQ(Decrypt(Mult(c2, c2, pub_keys.vector->pp), back.vector->sk), expect);
    } else {
      const auto c = CrtEncrypt(m, keys.crt->sk, keys.crt->pp, rng);
      const auto c2 = ParseCrtCiphertext(FormatCiphertext(c));
      EXPECT_EQ(c2, c);
      EXPECT_EQ(CrtDecrypt(Mult(c2, c2, pub_keys.crt->pp), back.crt->sk),
                Mod(m * m, back.crt->sk.kappa));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(All, KeyFiles,
                         ::testing::Values(SchemeCase{Scheme::kHE1, 1, 1},
                                           SchemeCase{Scheme::kHE1N, 1, 1},
                                           SchemeCase{Scheme::kHE2, 2, 1},
                                           SchemeCase{Scheme::kHEkN, 4, 1},
                                           SchemeCase{Scheme::kHE2NCRT, 2, 2}));

TEST(Ciphertext, ParseErrors) {
  EXPECT_THROW(ParseScalarCiphertext("12"), Error);
  EXPECT_THROW(ParseScalarCiphertext("a:1"), Error);
  EXPECT_EQ(ParseVectorCiphertext("1,2,3:9").v, (Vec{1, 2, 3}));
  const auto crt = ParseCrtCiphertext("1,2|3,4:5");
  ASSERT_EQ(crt.shards.size(), 2u);
  EXPECT_EQ(crt.shards[1], (Vec{3, 4}));
  EXPECT_EQ(crt.bound, 5);
}

TEST(Lines, SkipsBlanksAndComments) {
  std::istringstream in("# header\n\n1:2\n  \n3:4\n");
  EXPECT_EQ(ReadLines(in), (std::vector<std::string>{"1:2", "3:4"}));
}

TEST(ShardJobs, RoundTripEvaluates) {
  SeededRandom rng(92);
  const auto params = DeriveParams(Scheme::kHE2NCRT, 2, 2, 4, 2, 2);
  auto keys = CrtKeygen(params, rng);
  std::vector<Int> plain;
  std::vector<CrtCiphertext> cts;
  for (int i = 0; i < 4; ++i) {
    plain.push_back(rng.Below(params.M));
    cts.push_back(CrtEncrypt(plain.back(), keys.sk, keys.pp, rng));
  }
  const auto circuit = InnerProductCircuit(2, 2);
  std::vector<std::vector<VectorCiphertext>> outs;
  for (int j = 0; j < 2; ++j) {
    ShardJob job{j, keys.pp.shards[j], {}};
    for (const auto& c : cts) job.inputs.push_back(ShardOf(c, j));
    std::istringstream in(Dump([&](std::ostream& o) { WriteShardJob(o, job); }));
    const auto back = ReadShardJob(in);
    EXPECT_EQ(back.shard, j);
    EXPECT_EQ(back.pp.R, job.pp.R);
    EXPECT_EQ(back.inputs, job.inputs);
    outs.push_back(Evaluate<VectorOps>(circuit, back.inputs, VectorOps{back.pp}));
  }
  EXPECT_EQ(CrtDecrypt(Assemble(outs, 0), keys.sk),
            Mod(EvaluatePlain(circuit, plain)[0], keys.sk.kappa));
}

TEST(FheFiles, CompiledCircuitRoundTrip) {
  SeededRandom rng(93);
  const auto key = MakeFheKey(3, 64, 80, rng);
  const auto adder = RippleCarryAdder(2);
  const auto comp = CompileBooleanCircuit(adder, key, rng);
  std::istringstream prog_in(Dump([&](std::ostream& o) { WriteCompiledCircuit(o, comp.circuit); }));
  auto prog = ReadCompiledCircuit(prog_in);
  std::istringstream sec_in(Dump([&](std::ostream& o) { WriteCompileSecrets(o, comp.secrets); }));
  const auto secrets = ReadCompileSecrets(sec_in);
  EXPECT_EQ(prog.edges.size(), comp.circuit.edges.size());
  EXPECT_EQ(prog.programs, comp.circuit.programs);
  EXPECT_EQ(secrets.edge_encodings.size(), comp.secrets.edge_encodings.size());
  const bool in[] = {true, true, false, true};  // 3 + 2
  const auto cts = FheEncryptInputs(in, secrets, key, rng);
  const auto trace = FheEvaluate(prog, cts);
  EXPECT_EQ(FheDecryptOutputs(prog, trace, key), (std::vector<bool>{true, false, true}));
  const std::string text = Dump([&](std::ostream& o) { WriteCompiledCircuit(o, comp.circuit); });
  EXPECT_EQ(text.find("\nkappa="), std::string::npos);
}

}  // namespace
}  // namespace intfhe

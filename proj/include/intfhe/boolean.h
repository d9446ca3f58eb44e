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

#ifndef INTFHE_BOOLEAN_H_
#define INTFHE_BOOLEAN_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intfhe/attacks.h"
#include "intfhe/numeric.h"
#include "intfhe/vector.h"

namespace intfhe {

class RandomSource;

// Truth tables are 4 characters indexed by 2a + b; NAND is "1110".
bool GateValue(std::string_view tt, bool a, bool b);

struct BoolNode {
  enum Kind { kInput, kGate };
  Kind kind = kInput;
  std::string name;
  std::string tt;  // kGate only
  int lhs = -1;
  int rhs = -1;
};

struct BoolOutput {
  std::string name;
  int node = -1;                  // -1 when the output folded to a constant
  std::optional<bool> constant;
};

// Constant-free netlist in topological order.
struct BoolNetlist {
  std::vector<BoolNode> nodes;
  std::vector<int> inputs;
  std::vector<BoolOutput> outputs;

  int GateCount() const;
  int Depth() const;
};

// `INPUT x`, `g = GATE<tt4> a b` (or NAND/AND/OR/XOR/NOR/XNOR), `OUTPUT g`.
// Operands may be the literals 0 and 1; they are folded away. Definitions
// must precede use.
BoolNetlist ParseBoolNetlist(std::string_view text);
std::string FormatBoolNetlist(const BoolNetlist& netlist);

std::vector<bool> EvaluateBool(const BoolNetlist& netlist, std::span<const bool> inputs);

// NAND-only ripple-carry adder: inputs a0..a{n-1}, b0..b{n-1}; outputs
// s0..s{n-1}, cout.
BoolNetlist RippleCarryAdder(int bits);

struct Encoding {
  Int w0;  // 2 s0
  Int w1;  // 1 + 2 s1

  const Int& operator[](bool bit) const { return bit ? w1 : w0; }
};

Encoding DrawEncoding(const Int& kappa, RandomSource& rng);

// a + b x through (alpha_i, gamma_i), mod `mod`.
std::optional<std::array<Int, 2>> InterpolateLinear(const Encoding& alpha, const Encoding& gamma,
                                                    const Int& mod);
// a + b x + c y + d x y through (alpha_a, beta_b) -> gamma[tt(a, b)], mod `mod`.
std::optional<std::array<Int, 4>> InterpolateGate(const Encoding& alpha, const Encoding& beta,
                                                  const Encoding& gamma, std::string_view tt,
                                                  const Int& mod);
bool VerifyGate(const std::array<Int, 4>& coeffs, const Encoding& alpha, const Encoding& beta,
                const Encoding& gamma, std::string_view tt, const Int& mod);

struct FheKey {
  VectorKeys keys;
  Int kappa;
};

// Largest kappa with 8 kappa^3 < capacity.
Int FheKappa(const Int& capacity);

FheKey MakeFheKey(int k, unsigned lambda, unsigned eta, RandomSource& rng,
                  bool associativity_fix = true);
FheKey MakeFheKeyForModulus(const Modulus& mod, int k, RandomSource& rng,
                            bool associativity_fix = true);

struct Edge {
  int source = -1;
  int consumer = -1;  // -1: the environment (circuit output)
  int slot = 0;       // operand slot at the consumer, or output index
};

struct CompiledCircuit {
  BoolNetlist netlist;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_edges;   // per node
  std::vector<std::array<int, 2>> in_edges;  // per node, gates only
  std::vector<int> output_edges;             // per netlist output, -1 if constant
  // Per edge: encrypted (a, b) for edges leaving inputs, (a, b, c, d) for gates.
  std::vector<std::vector<VectorCiphertext>> programs;
  VectorPublicParams pp;
  Int wire_bound;  // 2 kappa
  int evaluations = 0;
};

struct CompileSecrets {
  std::vector<Encoding> input_encodings;  // per netlist input
  std::vector<Encoding> edge_encodings;   // per edge
  std::vector<std::vector<Int>> coefficients;
};

struct Compilation {
  CompiledCircuit circuit;
  CompileSecrets secrets;
};

Compilation CompileBooleanCircuit(const BoolNetlist& netlist, const FheKey& key, RandomSource& rng);

std::vector<VectorCiphertext> FheEncryptInputs(std::span<const bool> bits,
                                               const CompileSecrets& secrets, const FheKey& key,
                                               RandomSource& rng);

struct FheTrace {
  std::vector<VectorCiphertext> outputs;      // per netlist output; empty v if constant
  std::vector<VectorCiphertext> edge_values;  // per edge
};

// A compiled circuit may be evaluated once; `allow_reuse` overrides the guard.
FheTrace FheEvaluate(CompiledCircuit& circuit, std::span<const VectorCiphertext> inputs,
                     bool allow_reuse = false);

std::vector<bool> FheDecryptOutputs(const CompiledCircuit& circuit, const FheTrace& trace,
                                    const FheKey& key);

// Largest decrypted wire value over every edge of the trace.
Int MaxWireValue(const FheTrace& trace, const FheKey& key);

// (c1 - c2)(c1 - c3)(c2 - c3) per wire across three runs, then the
// determinant attack on k of them.
AttackReport ReuseCollisionAttack(std::span<const FheTrace> runs, const VectorPublicParams& pp);

}  // namespace intfhe

#endif  // INTFHE_BOOLEAN_H_

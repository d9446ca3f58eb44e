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

#ifndef INTFHE_CIRCUIT_H_
#define INTFHE_CIRCUIT_H_

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intfhe/errors.h"
#include "intfhe/numeric.h"
#include "intfhe/params.h"

namespace intfhe {

enum class NodeKind { kInput, kConstant, kAdd, kMul };

struct Node {
  NodeKind kind = NodeKind::kInput;
  std::string name;
  Int constant;  // kConstant only
  int lhs = -1;
  int rhs = -1;
};

// Nodes are stored in topological order: operands always precede their gate.
struct ArithCircuit {
  std::vector<Node> nodes;
  std::vector<int> inputs;
  std::vector<int> outputs;
  std::vector<int> degree;
  std::vector<int> depth;

  int Degree() const;
  int Depth() const;
  int Count(NodeKind kind) const;
};

class CircuitBuilder {
 public:
  int Input(std::string name);
  int Constant(const Int& value, std::string name = {});
  int Add(int lhs, int rhs, std::string name = {});
  int Mul(int lhs, int rhs, std::string name = {});
  void Output(int node);
  ArithCircuit Build() &&;

 private:
  int Push(Node node);
  ArithCircuit c_;
};

enum class CircuitErrorKind { kSyntax, kCycle, kDangling, kArity, kDuplicate };

class CircuitParseError : public Error {
 public:
  CircuitParseError(CircuitErrorKind kind, const std::string& what)
      : Error(ErrorCategory::kParse, what), kind_(kind) {}
  CircuitErrorKind kind() const { return kind_; }

 private:
  CircuitErrorKind kind_;
};

// Statements separated by newlines or ';'. `x` declares an input,
// `g = ADD|MUL a b` a gate (operands may be integer literals),
// `c = CONST v` a constant, `OUT g` an output. '#' starts a comment.
// Definitions may appear in any order.
ArithCircuit ParseCircuit(std::string_view text);
std::string FormatCircuit(const ArithCircuit& circuit);

// Lines of `d` inputs multiplied together, then all line products summed.
ArithCircuit InnerProductCircuit(int lines, int d);

struct CapacityLimits {
  Int capacity;                       // ciphertext bound must stay below this
  Int input_bound;                    // fresh ciphertext bound
  std::optional<Int> plain_capacity;  // noisy schemes: plaintext value vs kappa
  Int plain_input_bound;
  bool signed_mode = false;
};

CapacityLimits LimitsFor(const ParameterSet& params, bool signed_mode = false);

struct CapacityReport {
  bool ok = true;
  int node = -1;
  std::string node_name;
  Int bound;
  std::string limit;  // "capacity" or "kappa"
  std::vector<Int> bounds;
  std::vector<Int> plain_bounds;

  std::string Message() const;
};

CapacityReport CheckCapacity(const ArithCircuit& circuit, const CapacityLimits& limits);

// Plaintext evaluation of every node, optionally reduced mod `modulus`.
std::vector<Int> EvaluatePlainAll(const ArithCircuit& circuit, std::span<const Int> inputs,
                                  std::optional<Int> modulus = std::nullopt);
std::vector<Int> EvaluatePlain(const ArithCircuit& circuit, std::span<const Int> inputs,
                               std::optional<Int> modulus = std::nullopt);

template <typename Ops>
concept SchemeOps = requires(const Ops& ops, const typename Ops::Ciphertext& c, const Int& v) {
  { ops.Add(c, c) } -> std::same_as<typename Ops::Ciphertext>;
  { ops.Mult(c, c) } -> std::same_as<typename Ops::Ciphertext>;
  { ops.Constant(v) } -> std::same_as<typename Ops::Ciphertext>;
};

template <SchemeOps Ops>
std::vector<typename Ops::Ciphertext> Evaluate(const ArithCircuit& circuit,
                                               std::span<const typename Ops::Ciphertext> inputs,
                                               const Ops& ops) {
  using Ct = typename Ops::Ciphertext;
  if (inputs.size() != circuit.inputs.size()) {
    throw InvalidArgument("circuit expects " + std::to_string(circuit.inputs.size()) +
                          " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<std::optional<Ct>> wire(circuit.nodes.size());
  for (std::size_t i = 0; i < circuit.inputs.size(); ++i) wire[circuit.inputs[i]] = inputs[i];
  for (std::size_t i = 0; i < circuit.nodes.size(); ++i) {
    const Node& n = circuit.nodes[i];
    switch (n.kind) {
      case NodeKind::kInput:
        break;
      case NodeKind::kConstant:
        wire[i] = ops.Constant(n.constant);
        break;
      case NodeKind::kAdd:
        wire[i] = ops.Add(*wire[n.lhs], *wire[n.rhs]);
        break;
      case NodeKind::kMul:
        wire[i] = ops.Mult(*wire[n.lhs], *wire[n.rhs]);
        break;
    }
  }
  std::vector<Ct> out;
  out.reserve(circuit.outputs.size());
  for (int o : circuit.outputs) out.push_back(*wire[o]);
  return out;
}

// Evaluate after a successful capacity check; throws a capacity error naming
// the first offending node otherwise.
template <SchemeOps Ops>
std::vector<typename Ops::Ciphertext> EvaluateChecked(
    const ArithCircuit& circuit, std::span<const typename Ops::Ciphertext> inputs, const Ops& ops,
    const CapacityLimits& limits) {
  const CapacityReport report = CheckCapacity(circuit, limits);
  if (!report.ok) throw Error(ErrorCategory::kCapacity, report.Message());
  return Evaluate(circuit, inputs, ops);
}

}  // namespace intfhe

#endif  // INTFHE_CIRCUIT_H_

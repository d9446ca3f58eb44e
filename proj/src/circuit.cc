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

#include "intfhe/circuit.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace intfhe {
namespace {

bool IsIdentifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

bool IsLiteral(const std::string& s) {
  std::size_t start = (s.size() > 1 && s[0] == '-') ? 1 : 0;
  return start < s.size() && std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                         [](unsigned char c) { return std::isdigit(c); });
}

bool IsKeyword(const std::string& s) {
  return s == "ADD" || s == "MUL" || s == "CONST" || s == "OUT" || s == "OUTPUT";
}

struct Statement {
  NodeKind kind;
  std::string name;
  std::vector<std::string> operands;
  int line;
};

std::string Where(int line) { return "line " + std::to_string(line) + ": "; }

void ComputeShape(ArithCircuit& c) {
  c.degree.assign(c.nodes.size(), 0);
  c.depth.assign(c.nodes.size(), 0);
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    switch (n.kind) {
      case NodeKind::kInput:
        c.degree[i] = 1;
        break;
      case NodeKind::kConstant:
        break;
      case NodeKind::kAdd:
        c.degree[i] = std::max(c.degree[n.lhs], c.degree[n.rhs]);
        c.depth[i] = 1 + std::max(c.depth[n.lhs], c.depth[n.rhs]);
        break;
      case NodeKind::kMul:
        c.degree[i] = c.degree[n.lhs] + c.degree[n.rhs];
        c.depth[i] = 1 + std::max(c.depth[n.lhs], c.depth[n.rhs]);
        break;
    }
  }
}

Int Magnitude(const Int& v, bool signed_mode) {
  Int m = abs(v);
  if (signed_mode) m *= 2;
  return m;
}

}  // namespace

int ArithCircuit::Degree() const {
  int d = 0;
  for (int o : outputs) d = std::max(d, degree[o]);
  return d;
}

int ArithCircuit::Depth() const {
  int d = 0;
  for (int o : outputs) d = std::max(d, depth[o]);
  return d;
}

int ArithCircuit::Count(NodeKind kind) const {
  return static_cast<int>(
      std::count_if(nodes.begin(), nodes.end(), [&](const Node& n) { return n.kind == kind; }));
}

int CircuitBuilder::Push(Node node) {
  if (node.name.empty()) node.name = "_n" + std::to_string(c_.nodes.size());
  c_.nodes.push_back(std::move(node));
  return static_cast<int>(c_.nodes.size()) - 1;
}

int CircuitBuilder::Input(std::string name) {
  const int id = Push(Node{NodeKind::kInput, std::move(name), 0, -1, -1});
  c_.inputs.push_back(id);
  return id;
}

int CircuitBuilder::Constant(const Int& value, std::string name) {
  return Push(Node{NodeKind::kConstant, std::move(name), value, -1, -1});
}

int CircuitBuilder::Add(int lhs, int rhs, std::string name) {
  const int n = static_cast<int>(c_.nodes.size());
  if (lhs < 0 || rhs < 0 || lhs >= n || rhs >= n) throw InvalidArgument("Add: bad operand");
  return Push(Node{NodeKind::kAdd, std::move(name), 0, lhs, rhs});
}

int CircuitBuilder::Mul(int lhs, int rhs, std::string name) {
  const int n = static_cast<int>(c_.nodes.size());
  if (lhs < 0 || rhs < 0 || lhs >= n || rhs >= n) throw InvalidArgument("Mul: bad operand");
  return Push(Node{NodeKind::kMul, std::move(name), 0, lhs, rhs});
}

void CircuitBuilder::Output(int node) {
  if (node < 0 || node >= static_cast<int>(c_.nodes.size())) {
    throw InvalidArgument("Output: bad node");
  }
  c_.outputs.push_back(node);
}

ArithCircuit CircuitBuilder::Build() && {
  ComputeShape(c_);
  return std::move(c_);
}

ArithCircuit ParseCircuit(std::string_view text) {
  std::vector<Statement> defs;
  std::vector<std::pair<std::string, int>> outs;
  std::map<std::string, std::size_t> by_name;

  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream parts(raw);
    std::string stmt;
    while (std::getline(parts, stmt, ';')) {
      std::istringstream ws(stmt);
      std::vector<std::string> tok;
      for (std::string t; ws >> t;) tok.push_back(t);
      if (tok.empty()) continue;
      if (tok[0] == "OUT" || tok[0] == "OUTPUT") {
        if (tok.size() != 2) {
          throw CircuitParseError(CircuitErrorKind::kArity, Where(line_no) + "OUT takes one node");
        }
        outs.emplace_back(tok[1], line_no);
        continue;
      }
      Statement s;
      s.line = line_no;
      s.name = tok[0];
      if (!IsIdentifier(s.name) || IsKeyword(s.name)) {
        throw CircuitParseError(CircuitErrorKind::kSyntax,
                                Where(line_no) + "bad identifier '" + s.name + "'");
      }
      if (tok.size() == 1) {
        s.kind = NodeKind::kInput;
      } else {
        if (tok[1] != "=" || tok.size() < 3) {
          throw CircuitParseError(CircuitErrorKind::kSyntax,
                                  Where(line_no) + "expected 'name = OP args'");
        }
        const std::string& op = tok[2];
        s.operands.assign(tok.begin() + 3, tok.end());
        if (op == "ADD" || op == "MUL") {
          s.kind = op == "ADD" ? NodeKind::kAdd : NodeKind::kMul;
          if (s.operands.size() != 2) {
            throw CircuitParseError(CircuitErrorKind::kArity,
                                    Where(line_no) + op + " takes 2 operands, got " +
                                        std::to_string(s.operands.size()));
          }
        } else if (op == "CONST") {
          s.kind = NodeKind::kConstant;
          if (s.operands.size() != 1) {
            throw CircuitParseError(CircuitErrorKind::kArity, Where(line_no) + "CONST takes 1 value");
          }
          if (!IsLiteral(s.operands[0])) {
            throw CircuitParseError(CircuitErrorKind::kSyntax,
                                    Where(line_no) + "CONST needs an integer literal");
          }
        } else {
          throw CircuitParseError(CircuitErrorKind::kSyntax,
                                  Where(line_no) + "unknown operation '" + op + "'");
        }
      }
      if (by_name.count(s.name)) {
        throw CircuitParseError(CircuitErrorKind::kDuplicate,
                                Where(line_no) + "'" + s.name + "' defined twice");
      }
      by_name[s.name] = defs.size();
      defs.push_back(std::move(s));
    }
  }

  for (const auto& s : defs) {
    if (s.kind != NodeKind::kAdd && s.kind != NodeKind::kMul) continue;
    for (const auto& o : s.operands) {
      if (!IsLiteral(o) && !by_name.count(o)) {
        throw CircuitParseError(CircuitErrorKind::kDangling,
                                Where(s.line) + "'" + o + "' is never defined");
      }
    }
  }
  for (const auto& [name, line] : outs) {
    if (!by_name.count(name)) {
      throw CircuitParseError(CircuitErrorKind::kDangling,
                              Where(line) + "output '" + name + "' is never defined");
    }
  }

  CircuitBuilder b;
  std::vector<int> node_of(defs.size(), -1);
  std::vector<int> state(defs.size(), 0);  // 0 new, 1 on stack, 2 done
  int literal_count = 0;

  // Iterative DFS; inputs and constants are leaves.
  auto emit = [&](std::size_t root) {
    std::vector<std::pair<std::size_t, int>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [idx, next] = stack.back();
      const Statement& s = defs[idx];
      const bool gate = s.kind == NodeKind::kAdd || s.kind == NodeKind::kMul;
      if (gate && next < 2) {
        const std::string& o = s.operands[next++];
        if (IsLiteral(o)) continue;
        const std::size_t child = by_name.at(o);
        if (state[child] == 1) {
          throw CircuitParseError(CircuitErrorKind::kCycle,
                                  Where(s.line) + "cycle through '" + o + "'");
        }
        if (state[child] == 0) {
          state[child] = 1;
          stack.emplace_back(child, 0);
        }
        continue;
      }
      if (s.kind == NodeKind::kInput) {
        node_of[idx] = b.Input(s.name);
      } else if (s.kind == NodeKind::kConstant) {
        node_of[idx] = b.Constant(ParseInt(s.operands[0]), s.name);
      } else {
        int ops[2];
        for (int i = 0; i < 2; ++i) {
          const std::string& o = s.operands[i];
          ops[i] = IsLiteral(o) ? b.Constant(ParseInt(o), "_k" + std::to_string(literal_count++))
                                : node_of[by_name.at(o)];
        }
        node_of[idx] = s.kind == NodeKind::kAdd ? b.Add(ops[0], ops[1], s.name)
                                                : b.Mul(ops[0], ops[1], s.name);
      }
      state[idx] = 2;
      stack.pop_back();
    }
  };
  // Inputs first, in declaration order, so input positions are stable.
  for (std::size_t i = 0; i < defs.size(); ++i)
    if (defs[i].kind == NodeKind::kInput && state[i] == 0) emit(i);
  for (std::size_t i = 0; i < defs.size(); ++i)
    if (state[i] == 0) emit(i);

  if (outs.empty()) {
    std::vector<bool> used(defs.size(), false);
    for (const auto& s : defs)
      for (const auto& o : s.operands)
        if (by_name.count(o)) used[by_name.at(o)] = true;
    for (std::size_t i = 0; i < defs.size(); ++i)
      if (!used[i] && defs[i].kind != NodeKind::kInput) b.Output(node_of[i]);
  } else {
    for (const auto& [name, line] : outs) b.Output(node_of[by_name.at(name)]);
  }
  return std::move(b).Build();
}

std::string FormatCircuit(const ArithCircuit& c) {
  std::ostringstream os;
  for (const Node& n : c.nodes) {
    switch (n.kind) {
      case NodeKind::kInput:
        os << n.name << "\n";
        break;
      case NodeKind::kConstant:
        os << n.name << " = CONST " << n.constant << "\n";
        break;
      case NodeKind::kAdd:
      case NodeKind::kMul:
        os << n.name << " = " << (n.kind == NodeKind::kAdd ? "ADD " : "MUL ")
           << c.nodes[n.lhs].name << " " << c.nodes[n.rhs].name << "\n";
        break;
    }
  }
  for (int o : c.outputs) os << "OUT " << c.nodes[o].name << "\n";
  return os.str();
}

ArithCircuit InnerProductCircuit(int lines, int d) {
  if (lines < 1 || d < 1) throw InvalidArgument("InnerProductCircuit: need lines, d >= 1");
  CircuitBuilder b;
  std::vector<int> inputs;
  for (int i = 0; i < lines * d; ++i) inputs.push_back(b.Input("x" + std::to_string(i)));
  int acc = -1;
  for (int l = 0; l < lines; ++l) {
    int prod = inputs[l * d];
    for (int j = 1; j < d; ++j) prod = b.Mul(prod, inputs[l * d + j]);
    acc = acc < 0 ? prod : b.Add(acc, prod);
  }
  b.Output(acc);
  return std::move(b).Build();
}

CapacityLimits LimitsFor(const ParameterSet& params, bool signed_mode) {
  CapacityLimits limits;
  limits.capacity = BoundCapacity(params);
  limits.signed_mode = signed_mode;
  limits.plain_input_bound = params.M;
  limits.input_bound = params.M;
  if (IsNoisy(params.scheme)) {
    const Int kappa_max = Pow2(params.kappa_bits) - 1;
    limits.input_bound += kappa_max * kappa_max;
    limits.plain_capacity = KappaCapacity(params);
  }
  if (signed_mode) {
    limits.input_bound *= 2;
    limits.plain_input_bound *= 2;
  }
  return limits;
}

std::string CapacityReport::Message() const {
  if (ok) return "ok";
  return "node '" + node_name + "' bound " + ToString(bound) + " reaches the " + limit + " limit";
}

CapacityReport CheckCapacity(const ArithCircuit& c, const CapacityLimits& limits) {
  CapacityReport report;
  report.bounds.resize(c.nodes.size());
  report.plain_bounds.resize(c.nodes.size());
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    Int& b = report.bounds[i];
    Int& pb = report.plain_bounds[i];
    switch (n.kind) {
      case NodeKind::kInput:
        b = limits.input_bound;
        pb = limits.plain_input_bound;
        break;
      case NodeKind::kConstant:
        b = Magnitude(n.constant, limits.signed_mode);
        pb = b;
        break;
      case NodeKind::kAdd:
        b = report.bounds[n.lhs] + report.bounds[n.rhs];
        pb = report.plain_bounds[n.lhs] + report.plain_bounds[n.rhs];
        break;
      case NodeKind::kMul:
        b = report.bounds[n.lhs] * report.bounds[n.rhs];
        pb = report.plain_bounds[n.lhs] * report.plain_bounds[n.rhs];
        break;
    }
    if (!report.ok) continue;
    if (b >= limits.capacity) {
      report.ok = false;
      report.limit = "capacity";
      report.bound = b;
    } else if (limits.plain_capacity && pb >= *limits.plain_capacity) {
      report.ok = false;
      report.limit = "kappa";
      report.bound = pb;
    }
    if (!report.ok) {
      report.node = static_cast<int>(i);
      report.node_name = n.name;
    }
  }
  return report;
}

std::vector<Int> EvaluatePlainAll(const ArithCircuit& c, std::span<const Int> inputs,
                                  std::optional<Int> modulus) {
  if (inputs.size() != c.inputs.size()) throw InvalidArgument("EvaluatePlain: input count");
  std::vector<Int> v(c.nodes.size());
  for (std::size_t i = 0; i < c.inputs.size(); ++i) v[c.inputs[i]] = inputs[i];
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    switch (n.kind) {
      case NodeKind::kInput:
        break;
      case NodeKind::kConstant:
        v[i] = n.constant;
        break;
      case NodeKind::kAdd:
        v[i] = v[n.lhs] + v[n.rhs];
        break;
      case NodeKind::kMul:
        v[i] = v[n.lhs] * v[n.rhs];
        break;
    }
    if (modulus) v[i] = Mod(v[i], *modulus);
  }
  return v;
}

std::vector<Int> EvaluatePlain(const ArithCircuit& c, std::span<const Int> inputs,
                               std::optional<Int> modulus) {
  const auto all = EvaluatePlainAll(c, inputs, modulus);
  std::vector<Int> out;
  for (int o : c.outputs) out.push_back(all[o]);
  return out;
}

}  // namespace intfhe

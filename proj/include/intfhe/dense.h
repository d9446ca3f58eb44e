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

#ifndef INTFHE_DENSE_H_
#define INTFHE_DENSE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "intfhe/numeric.h"

namespace intfhe {

using Vec = std::vector<Int>;

// Small dense row-major matrix of big integers. Arithmetic is done by the free
// functions below, which reduce modulo an explicit modulus.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ModMatrix Identity(std::size_t n);
  static ModMatrix FromColumns(std::span<const Vec> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec Row(std::size_t r) const;
  Vec Column(std::size_t c) const;

  bool operator==(const ModMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

ModMatrix Transpose(const ModMatrix& a);
ModMatrix Reduce(const ModMatrix& a, const Int& mod);
ModMatrix Multiply(const ModMatrix& a, const ModMatrix& b, const Int& mod);
Vec Multiply(const ModMatrix& a, std::span<const Int> v, const Int& mod);

Vec Reduce(std::span<const Int> v, const Int& mod);
Vec AddVec(std::span<const Int> a, std::span<const Int> b, const Int& mod);
Vec SubVec(std::span<const Int> a, std::span<const Int> b, const Int& mod);
Vec Hadamard(std::span<const Int> a, std::span<const Int> b, const Int& mod);
Vec Scale(std::span<const Int> v, const Int& s, const Int& mod);
Int Dot(std::span<const Int> a, std::span<const Int> b, const Int& mod);

// Exact integer determinant (fraction-free Bareiss elimination).
Int Determinant(const ModMatrix& a);

// Gauss-Jordan over the field Z/p. nullopt when singular mod p.
std::optional<ModMatrix> InverseModPrime(const ModMatrix& a, const Int& p);
std::optional<Vec> SolveModPrime(const ModMatrix& a, std::span<const Int> b, const Int& p);

// Inverse modulo p*q for distinct primes p, q, assembled by CRT from the two
// field inverses. nullopt when singular modulo either prime.
std::optional<ModMatrix> InverseModSemiprime(const ModMatrix& a, const Int& p, const Int& q);

}  // namespace intfhe

#endif  // INTFHE_DENSE_H_

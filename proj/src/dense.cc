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

#include "intfhe/dense.h"

#include <utility>

#include "intfhe/errors.h"

namespace intfhe {

ModMatrix ModMatrix::Identity(std::size_t n) {
  ModMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ModMatrix ModMatrix::FromColumns(std::span<const Vec> columns) {
  if (columns.empty()) return {};
  ModMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) throw InvalidArgument("FromColumns: ragged columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec ModMatrix::Row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec ModMatrix::Column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ModMatrix Transpose(const ModMatrix& a) {
  ModMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

ModMatrix Reduce(const ModMatrix& a, const Int& mod) {
  ModMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = Mod(a(r, c), mod);
  return out;
}

ModMatrix Multiply(const ModMatrix& a, const ModMatrix& b, const Int& mod) {
  if (a.cols() != b.rows()) throw InvalidArgument("Multiply: shape mismatch");
  ModMatrix out(a.rows(), b.cols());
  Int acc;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      acc = 0;
      for (std::size_t i = 0; i < a.cols(); ++i) acc += a(r, i) * b(i, c);
      out(r, c) = Mod(acc, mod);
    }
  }
  return out;
}

Vec Multiply(const ModMatrix& a, std::span<const Int> v, const Int& mod) {
  if (a.cols() != v.size()) throw InvalidArgument("Multiply: shape mismatch");
  Vec out(a.rows());
  Int acc;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    acc = 0;
    for (std::size_t i = 0; i < a.cols(); ++i) acc += a(r, i) * v[i];
    out[r] = Mod(acc, mod);
  }
  return out;
}

Vec Reduce(std::span<const Int> v, const Int& mod) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Mod(v[i], mod);
  return out;
}

Vec AddVec(std::span<const Int> a, std::span<const Int> b, const Int& mod) {
  if (a.size() != b.size()) throw InvalidArgument("AddVec: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Mod(a[i] + b[i], mod);
  return out;
}

Vec SubVec(std::span<const Int> a, std::span<const Int> b, const Int& mod) {
  if (a.size() != b.size()) throw InvalidArgument("SubVec: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Mod(a[i] - b[i], mod);
  return out;
}

Vec Hadamard(std::span<const Int> a, std::span<const Int> b, const Int& mod) {
  if (a.size() != b.size()) throw InvalidArgument("Hadamard: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Mod(a[i] * b[i], mod);
  return out;
}

Vec Scale(std::span<const Int> v, const Int& s, const Int& mod) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Mod(v[i] * s, mod);
  return out;
}

Int Dot(std::span<const Int> a, std::span<const Int> b, const Int& mod) {
  if (a.size() != b.size()) throw InvalidArgument("Dot: length mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return Mod(acc, mod);
}

Int Determinant(const ModMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("Determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  ModMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<ModMatrix> InverseModPrime(const ModMatrix& a, const Int& p) {
  if (a.rows() != a.cols()) throw InvalidArgument("InverseModPrime: matrix not square");
  const std::size_t n = a.rows();
  ModMatrix m = Reduce(a, p);
  ModMatrix inv = ModMatrix::Identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(pivot, c), m(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Int scale = *ModInverse(m(col, col), p);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) = Mod(m(col, c) * scale, p);
      inv(col, c) = Mod(inv(col, c) * scale, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Int factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = Mod(m(r, c) - factor * m(col, c), p);
        inv(r, c) = Mod(inv(r, c) - factor * inv(col, c), p);
      }
    }
  }
  return inv;
}

std::optional<Vec> SolveModPrime(const ModMatrix& a, std::span<const Int> b, const Int& p) {
  auto inv = InverseModPrime(a, p);
  if (!inv) return std::nullopt;
  return Multiply(*inv, b, p);
}

std::optional<ModMatrix> InverseModSemiprime(const ModMatrix& a, const Int& p, const Int& q) {
  auto inv_p = InverseModPrime(a, p);
  if (!inv_p) return std::nullopt;
  auto inv_q = InverseModPrime(a, q);
  if (!inv_q) return std::nullopt;
  ModMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = CrtPair((*inv_p)(r, c), p, (*inv_q)(r, c), q);
  return out;
}

}  // namespace intfhe

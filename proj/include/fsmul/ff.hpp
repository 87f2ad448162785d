// Copyright 2026 The fsmul Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsmul/error.hpp"

namespace fsmul {

// Residue in [0, q).  q <= 2^16 keeps every product inside 32 bits.
using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

/// Prime field F_q.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  /// Throws NotPrime unless q is a prime with 2 <= q <= 2^16.
  explicit FieldSpec(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  Scalar reduce(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(q_);
    auto r = v % m;
    return static_cast<Scalar>(r < 0 ? r + m : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    const Scalar s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % q_; }
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  /// Representative in (-q/2, q/2]; over F_3 the residue 2 maps to -1.
  std::int64_t symmetric(Scalar a) const noexcept {
    return a > q_ / 2 ? static_cast<std::int64_t>(a) - q_ : static_cast<std::int64_t>(a);
  }
  /// True for +1 and -1, the scalars whose multiplication is free.
  bool is_unit_sign(Scalar a) const noexcept { return a == 1 || a == q_ - 1; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  /// Entries are reduced modulo q, so negative integers are accepted.
  static Matrix from_rows(FieldSpec field,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_rows(FieldSpec field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) { data_[i * cols_ + j] = v % field_.q(); }

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  Vector column_vector(std::size_t j) const;
  const std::vector<Scalar>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  std::size_t row_weight(std::size_t i) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// Throws Singular for a non-square or rank-deficient input.
Matrix invert(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Rows of m selected by index, in the given order.
Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows);
Vector matvec(const Matrix& m, std::span<const Scalar> x);

std::size_t rank(const Matrix& m);

/// X with X*a == b.  Throws NoSolution when the rows of b are not in the row
/// space of a.
Matrix solve_right(const Matrix& a, const Matrix& b);

/// Basis of {x : m*x = 0}, one vector per row.
Matrix nullspace(const Matrix& m);

/// Reduced row echelon form; pivot columns reported in row order.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon row_echelon(const Matrix& m);

/// Text format: header "rows cols q", then rows*cols integers in [0,q).
/// Lines starting with '#' are comments.
Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);
Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace fsmul

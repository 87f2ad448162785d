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

#include "fsmul/ff.hpp"

#include "fsmul/random.hpp"

#include <fstream>
#include <sstream>

namespace fsmul {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::BadFormat: return "BadFormat";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ReassignedVariable: return "ReassignedVariable";
    case ErrorKind::UseBeforeDefine: return "UseBeforeDefine";
    case ErrorKind::NonBilinearProduct: return "NonBilinearProduct";
    case ErrorKind::MissingInput: return "MissingInput";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::DeadCode: return "DeadCode";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::NotPolyMul: return "NotPolyMul";
    case ErrorKind::StageMismatch: return "StageMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::EmptyCode: return "EmptyCode";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (q > kMaxModulus || !is_prime(q))
    throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(q) + " is not a prime <= 65536");
}

Scalar FieldSpec::inv(Scalar a) const {
  if (a % q_ == 0) throw Error(ErrorKind::Singular, "inverse of zero");
  // Fermat: a^(q-2).
  Scalar result = 1, base = a % q_;
  for (std::uint32_t e = q_ - 2; e != 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = field.reduce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(FieldSpec field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(field, v);
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const noexcept {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

std::size_t Matrix::row_weight(std::size_t i) const {
  std::size_t w = 0;
  for (auto v : row(i)) w += v != 0;
  return w;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    throw Error(ErrorKind::DimensionMismatch, "matrices over different fields");
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "matmul " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " +
                                                  std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  const auto& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.set(i, j, f.add(c(i, j), f.mul(aik, b(k, j))));
    }
  }
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.set(j, i, m(i, j));
  return t;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  Matrix k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t u = 0; u < b.rows(); ++u)
        for (std::size_t v = 0; v < b.cols(); ++v)
          k.set(i * b.rows() + u, j * b.cols() + v, f.mul(a(i, j), b(u, v)));
  return k;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
    throw Error(ErrorKind::DimensionMismatch, "vstack column counts differ");
  const std::size_t cols = top.rows() != 0 ? top.cols() : bottom.cols();
  Matrix m(top.field(), top.rows() + bottom.rows(), cols);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, top(i, j));
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(top.rows() + i, j, bottom(i, j));
  return m;
}

Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows) {
  Matrix s(m.field(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.set(i, j, m(rows[i], j));
  return s;
}

Vector matvec(const Matrix& m, std::span<const Scalar> x) {
  if (x.size() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, "matvec vector length");
  const auto& f = m.field();
  Vector y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    auto r = m.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) acc += static_cast<std::uint64_t>(r[j]) * x[j];
    y[i] = static_cast<Scalar>(acc % f.q());
  }
  return y;
}

Echelon row_echelon(const Matrix& m) {
  const auto& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // First nonzero at or below `row`: lowest index wins.
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Scalar t = a(p, j);
        a.set(p, j, a(row, j));
        a.set(row, j, t);
      }
    const Scalar inv = f.inv(a(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(row, j, f.mul(a(row, j), inv));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.set(i, j, f.sub(a(i, j), f.mul(factor, a(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix solve_right(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "solve_right column counts differ");
  const auto& f = a.field();
  const std::size_t p = a.rows(), c = a.cols();

  // Reduce [a | I_p]; each echelon row of a then comes with the combination
  // of original rows producing it.
  Matrix aug(f, p, c + p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug.set(i, j, a(i, j));
    aug.set(i, c + i, 1);
  }
  // Pivot search restricted to the first c columns.
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < p; ++col) {
    std::size_t piv = row;
    while (piv < p && aug(piv, col) == 0) ++piv;
    if (piv == p) continue;
    if (piv != row)
      for (std::size_t j = 0; j < aug.cols(); ++j) {
        const Scalar t = aug(piv, j);
        aug.set(piv, j, aug(row, j));
        aug.set(row, j, t);
      }
    const Scalar inv = f.inv(aug(row, col));
    for (std::size_t j = 0; j < aug.cols(); ++j) aug.set(row, j, f.mul(aug(row, j), inv));
    for (std::size_t i = 0; i < p; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      const Scalar factor = aug(i, col);
      for (std::size_t j = 0; j < aug.cols(); ++j)
        aug.set(i, j, f.sub(aug(i, j), f.mul(factor, aug(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }

  Matrix x(f, b.rows(), p);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Vector residual = b.row_vector(i);
    Vector combo(p, 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Scalar coef = residual[pivots[k]];
      if (coef == 0) continue;
      for (std::size_t j = 0; j < c; ++j)
        residual[j] = f.sub(residual[j], f.mul(coef, aug(k, j)));
      for (std::size_t j = 0; j < p; ++j) combo[j] = f.add(combo[j], f.mul(coef, aug(k, c + j)));
    }
    for (auto v : residual)
      if (v != 0)
        throw Error(ErrorKind::NoSolution,
                    "row " + std::to_string(i) + " is outside the row space");
    for (std::size_t j = 0; j < p; ++j) x.set(i, j, combo[j]);
  }
  return x;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols() || rank(m) != m.rows())
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  return solve_right(m, Matrix::identity(m.field(), m.rows()));
}

Matrix nullspace(const Matrix& m) {
  const auto& f = m.field();
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Matrix basis(f, m.cols() - ech.pivots.size(), m.cols());
  std::size_t b = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(b, free, 1);
    for (std::size_t k = 0; k < ech.pivots.size(); ++k)
      basis.set(b, ech.pivots[k], f.neg(ech.reduced(k, free)));
    ++b;
  }
  return basis;
}

// ---------------------------------------------------------------- text I/O

Matrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::int64_t> tokens;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const auto v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        tokens.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadFormat, "not an integer: '" + tok + "'");
      }
    }
  }
  if (tokens.size() < 3) throw Error(ErrorKind::BadFormat, "missing 'rows cols q' header");
  const auto rows = tokens[0], cols = tokens[1], q = tokens[2];
  if (rows < 0 || cols < 0 || q < 2)
    throw Error(ErrorKind::BadFormat, "bad header");
  FieldSpec field(static_cast<std::uint32_t>(q));
  if (tokens.size() != 3 + static_cast<std::size_t>(rows * cols))
    throw Error(ErrorKind::BadFormat, "expected " + std::to_string(rows * cols) + " entries, got " +
                                          std::to_string(tokens.size() - 3));
  Matrix m(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::int64_t j = 0; j < cols; ++j) {
      const auto v = tokens[3 + i * cols + j];
      if (v < 0 || v >= q)
        throw Error(ErrorKind::BadFormat, "entry " + std::to_string(v) + " outside [0,q)");
      m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<Scalar>(v));
    }
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().q() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadFormat, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadFormat, "cannot write " + path.string());
  out << format_matrix(m);
}

Matrix random_matrix(Rng& rng, const FieldSpec& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<Scalar>(rng() % f.q()));
  return m;
}

Matrix random_invertible(Rng& rng, const FieldSpec& f, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, f, n, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace fsmul

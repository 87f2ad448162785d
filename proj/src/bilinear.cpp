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

#include "fsmul/bilinear.hpp"

#include <atomic>
#include <limits>
#include <mutex>

#include "fsmul/parallel.hpp"
#include "fsmul/random.hpp"

namespace fsmul {

namespace {

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

// q^e, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> bounded_pow(std::uint64_t q, std::size_t e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > cap / q) return std::nullopt;
    v *= q;
  }
  return v;
}

void digits(std::uint64_t idx, std::uint32_t q, std::span<Scalar> out) {
  for (auto& d : out) {
    d = static_cast<Scalar>(idx % q);
    idx /= q;
  }
}

}  // namespace

LrpAlgorithm::LrpAlgorithm(Matrix L, Matrix R, Matrix P) : L_(std::move(L)), R_(std::move(R)), P_(std::move(P)) {
  if (!(L_.field() == R_.field()) || !(L_.field() == P_.field()))
    throw Error(ErrorKind::DimensionMismatch, "L, R and P over different fields");
  if (L_.rows() != R_.rows() || P_.cols() != L_.rows())
    throw Error(ErrorKind::DimensionMismatch, "L " + dims(L_.rows(), L_.cols()) + ", R " +
                                                  dims(R_.rows(), R_.cols()) + ", P " +
                                                  dims(P_.rows(), P_.cols()));
}

Vector lrp_eval(const LrpAlgorithm& alg, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != alg.n_left() || y.size() != alg.n_right())
    throw Error(ErrorKind::DimensionMismatch, "operand lengths " + std::to_string(x.size()) + "," +
                                                  std::to_string(y.size()));
  const auto& f = alg.field();
  auto lx = matvec(alg.L(), x);
  const auto ry = matvec(alg.R(), y);
  for (std::size_t i = 0; i < lx.size(); ++i) lx[i] = f.mul(lx[i], ry[i]);
  return matvec(alg.P(), lx);
}

BilinearOracle::BilinearOracle(Kind kind, Matrix table, std::size_t n_left, std::size_t n_right,
                               Polynomial modulus)
    : kind_(kind),
      field_(table.field()),
      n_left_(n_left),
      n_right_(n_right),
      n_out_(table.rows()),
      table_(std::move(table)),
      modulus_(std::move(modulus)) {}

BilinearOracle BilinearOracle::poly_mul(const FieldSpec& f, std::size_t deg_a, std::size_t deg_b) {
  const auto nl = deg_a + 1, nr = deg_b + 1;
  Matrix t(f, deg_a + deg_b + 1, nl * nr);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j) t.set(i + j, i * nr + j, 1);
  return BilinearOracle(Kind::PolyMul, std::move(t), nl, nr, {});
}

BilinearOracle BilinearOracle::mod_poly_mul(const FieldSpec& f, const Polynomial& modulus,
                                            bool check_irreducible) {
  const int d = degree(modulus);
  if (d < 1) throw Error(ErrorKind::BadDegree, "modulus must have degree >= 1");
  if (!is_monic(modulus)) throw Error(ErrorKind::BadDegree, "modulus must be monic");
  if (check_irreducible && !is_irreducible(f, modulus))
    throw Error(ErrorKind::NotIrreducible, format_poly(f, modulus) + " is reducible");
  const auto n = static_cast<std::size_t>(d);
  Matrix t(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial mono(i + j + 1, 0);
      mono[i + j] = 1;
      const auto red = poly_mod(f, mono, modulus);
      for (std::size_t k = 0; k < red.size(); ++k) t.set(k, i * n + j, red[k]);
    }
  return BilinearOracle(Kind::ModPolyMul, std::move(t), n, n, trim(modulus));
}

BilinearOracle BilinearOracle::table(Matrix table, std::size_t n_left, std::size_t n_right) {
  if (table.cols() != n_left * n_right)
    throw Error(ErrorKind::DimensionMismatch, "table has " + std::to_string(table.cols()) +
                                                  " columns, expected " + std::to_string(n_left * n_right));
  return BilinearOracle(Kind::Table, std::move(table), n_left, n_right, {});
}

BilinearOracle BilinearOracle::from_lrp(const LrpAlgorithm& alg) {
  const auto& f = alg.field();
  const auto nl = alg.n_left(), nr = alg.n_right();
  Matrix t(f, alg.n_out(), nl * nr);
  for (std::size_t k = 0; k < alg.n_out(); ++k)
    for (std::size_t s = 0; s < alg.rank(); ++s) {
      const auto pk = alg.P()(k, s);
      if (pk == 0) continue;
      for (std::size_t i = 0; i < nl; ++i) {
        const auto li = f.mul(pk, alg.L()(s, i));
        if (li == 0) continue;
        for (std::size_t j = 0; j < nr; ++j)
          t.set(k, i * nr + j, f.add(t(k, i * nr + j), f.mul(li, alg.R()(s, j))));
      }
    }
  return BilinearOracle(Kind::Table, std::move(t), nl, nr, {});
}

std::string BilinearOracle::describe() const {
  const std::string over = " over F_" + std::to_string(field_.q());
  switch (kind_) {
    case Kind::PolyMul:
      return "PolyMul(" + std::to_string(n_left_ - 1) + "," + std::to_string(n_right_ - 1) + ")" + over;
    case Kind::ModPolyMul:
      return "ModPolyMul(" + format_poly(field_, modulus_) + ")" + over;
    case Kind::Table:
      break;
  }
  return "Table(" + std::to_string(n_out_) + "x" + std::to_string(n_left_) + "x" +
         std::to_string(n_right_) + ")" + over;
}

Vector BilinearOracle::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != n_left_ || y.size() != n_right_)
    throw Error(ErrorKind::DimensionMismatch, "operand lengths do not match the oracle");
  Vector z(n_left_ * n_right_);
  for (std::size_t i = 0; i < n_left_; ++i)
    for (std::size_t j = 0; j < n_right_; ++j) z[i * n_right_ + j] = field_.mul(x[i], y[j]);
  return matvec(table_, z);
}

BilinearOracle oracle_from_modulus(const FieldSpec& f, const Polynomial& modulus, bool check_irreducible) {
  return BilinearOracle::mod_poly_mul(f, modulus, check_irreducible);
}

VerifyReport verify_fn(const BilinearFn& candidate, const BilinearOracle& oracle,
                       const VerifyOptions& options) {
  const auto& f = oracle.field();
  const auto nl = oracle.n_left(), nr = oracle.n_right();
  VerifyReport rep;
  rep.seed = options.seed;

  const auto total = bounded_pow(f.q(), nl + nr, options.exhaustive_limit);
  rep.exhaustive = total.has_value();
  std::vector<std::pair<Vector, Vector>> samples;
  std::uint64_t count = 0;
  if (rep.exhaustive) {
    count = *total;
  } else {
    Rng rng(options.seed);
    count = options.samples;
    samples.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) {
      auto x = random_vector(rng, f, nl);
      auto y = random_vector(rng, f, nr);
      samples.emplace_back(std::move(x), std::move(y));
    }
  }

  const std::uint64_t y_count = rep.exhaustive ? *bounded_pow(f.q(), nr, options.exhaustive_limit) : 0;
  std::atomic<std::uint64_t> first{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  parallel_chunks(count, options.workers, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    Vector x(nl), y(nr);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (idx > first.load(std::memory_order_relaxed)) return;
      if (rep.exhaustive) {
        digits(idx / y_count, f.q(), x);
        digits(idx % y_count, f.q(), y);
      } else {
        x = samples[idx].first;
        y = samples[idx].second;
      }
      auto expected = oracle(x, y);
      auto actual = candidate(x, y);
      if (expected == actual) continue;
      std::lock_guard lock(mu);
      if (idx < first.load()) {
        first.store(idx);
        rep.first_mismatch = Mismatch{idx, x, y, std::move(expected), std::move(actual)};
      }
      return;
    }
  });
  rep.pairs_checked = rep.first_mismatch ? rep.first_mismatch->index + 1 : count;
  return rep;
}

VerifyReport verify(const LrpAlgorithm& alg, const BilinearOracle& oracle, const VerifyOptions& options) {
  if (!(alg.field() == oracle.field()) || alg.n_left() != oracle.n_left() ||
      alg.n_right() != oracle.n_right() || alg.n_out() != oracle.n_out())
    throw Error(ErrorKind::DimensionMismatch, "algorithm shape does not match " + oracle.describe());
  return verify_fn([&](auto x, auto y) { return lrp_eval(alg, x, y); }, oracle, options);
}

LrpAlgorithm standard_poly_mul(const FieldSpec& f, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "need at least one term");
  Matrix L(f, n * n, n), R(f, n * n, n), P(f, 2 * n - 1, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      L.set(i * n + j, i, 1);
      R.set(i * n + j, j, 1);
      P.set(i + j, i * n + j, 1);
    }
  return LrpAlgorithm(std::move(L), std::move(R), std::move(P));
}

LrpAlgorithm karatsuba(const FieldSpec& f) {
  return LrpAlgorithm(Matrix::from_rows(f, {{1, 0}, {1, -1}, {0, 1}}),
                      Matrix::from_rows(f, {{1, 0}, {-1, 1}, {0, 1}}),
                      Matrix::from_rows(f, {{1, 0, 0}, {1, 1, 1}, {0, 0, 1}}));
}

LrpAlgorithm trivial_lrp(const FieldSpec& f) {
  return LrpAlgorithm(Matrix::identity(f, 1), Matrix::identity(f, 1), Matrix::identity(f, 1));
}

namespace {

void require_poly_mul(const LrpAlgorithm& alg, const char* which, const VerifyOptions& options) {
  const auto n = alg.n_left();
  if (n == 0 || alg.n_right() != n || alg.n_out() != 2 * n - 1)
    throw Error(ErrorKind::NotPolyMul, std::string(which) + " operand does not have polynomial-product shape");
  if (!verify(alg, BilinearOracle::poly_mul(alg.field(), n - 1, n - 1), options).passed())
    throw Error(ErrorKind::NotPolyMul, std::string(which) + " operand fails polynomial-product verification");
}

}  // namespace

LrpAlgorithm compose_poly_mul(const LrpAlgorithm& outer, const LrpAlgorithm& inner, const VerifyOptions& options) {
  if (!(outer.field() == inner.field())) throw Error(ErrorKind::DimensionMismatch, "operands over different fields");
  require_poly_mul(outer, "outer", options);
  require_poly_mul(inner, "inner", options);
  const auto& f = outer.field();
  const auto m = outer.n_left(), k = inner.n_left();
  const auto ro = outer.rank(), ri = inner.rank();
  Matrix P(f, 2 * m * k - 1, ro * ri);
  for (std::size_t i = 0; i < outer.n_out(); ++i)
    for (std::size_t u = 0; u < ro; ++u) {
      const auto po = outer.P()(i, u);
      if (po == 0) continue;
      for (std::size_t j = 0; j < inner.n_out(); ++j)
        for (std::size_t v = 0; v < ri; ++v) {
          const auto row = i * k + j, col = u * ri + v;
          P.set(row, col, f.add(P(row, col), f.mul(po, inner.P()(j, v))));
        }
    }
  return LrpAlgorithm(kron(outer.L(), inner.L()), kron(outer.R(), inner.R()), std::move(P));
}

Matrix reduction_matrix(const FieldSpec& f, const Polynomial& modulus) {
  const int d1 = degree(modulus);
  if (d1 < 1 || !is_monic(modulus)) throw Error(ErrorKind::BadDegree, "modulus must be monic of degree >= 1");
  const auto n = static_cast<std::size_t>(d1);
  Matrix red(f, n, 2 * n - 1);
  for (std::size_t i = 0; i < 2 * n - 1; ++i) {
    Polynomial mono(i + 1, 0);
    mono[i] = 1;
    const auto r = poly_mod(f, mono, modulus);
    for (std::size_t k = 0; k < r.size(); ++k) red.set(k, i, r[k]);
  }
  return red;
}

Matrix fold(const Matrix& p, const Polynomial& modulus, bool check_irreducible) {
  const auto& f = p.field();
  const int d1 = degree(modulus);
  if (d1 < 1 || !is_monic(modulus)) throw Error(ErrorKind::BadDegree, "modulus must be monic of degree >= 1");
  const auto n = static_cast<std::size_t>(d1);
  if (p.rows() != 2 * n - 1)
    throw Error(ErrorKind::BadDegree, "P has " + std::to_string(p.rows()) + " rows, modulus of degree " +
                                          std::to_string(n) + " needs " + std::to_string(2 * n - 1));
  if (check_irreducible && !is_irreducible(f, modulus))
    throw Error(ErrorKind::NotIrreducible, format_poly(f, modulus) + " is reducible");

  Matrix out(f, n, p.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < p.cols(); ++c) out.set(i, c, p(i, c));
  // xi = X^i mod I, advanced by one multiplication by X per row.
  Vector xi(n, 0);
  xi[n - 1] = 1;
  for (std::size_t i = n; i < 2 * n - 1; ++i) {
    const Scalar carry = xi[n - 1];
    for (std::size_t j = n - 1; j > 0; --j) xi[j] = f.sub(xi[j - 1], f.mul(carry, modulus[j]));
    xi[0] = f.neg(f.mul(carry, modulus[0]));
    for (std::size_t j = 0; j < n; ++j) {
      if (xi[j] == 0) continue;
      for (std::size_t c = 0; c < p.cols(); ++c) out.set(j, c, f.add(out(j, c), f.mul(xi[j], p(i, c))));
    }
  }
  return out;
}

LrpAlgorithm isotopy_apply(const LrpAlgorithm& alg, const IsotopyTriple& t) {
  auto square = [](const Matrix& m, std::size_t n, const char* name) {
    if (m.rows() != n || m.cols() != n)
      throw Error(ErrorKind::DimensionMismatch, std::string(name) + " must be " + dims(n, n));
    if (rank(m) != n) throw Error(ErrorKind::Singular, std::string(name) + " is not invertible");
  };
  square(t.X, alg.n_left(), "X");
  square(t.Y, alg.n_right(), "Y");
  square(t.Z, alg.n_out(), "Z");
  return LrpAlgorithm(matmul(alg.L(), t.X), matmul(alg.R(), t.Y), matmul(t.Z, alg.P()));
}

ContractionSpace contraction_space(const LrpAlgorithm& alg) {
  const auto table = BilinearOracle::from_lrp(alg).structure();
  ContractionSpace cs;
  for (std::size_t j = 0; j < alg.n_out(); ++j) {
    Matrix u(alg.field(), alg.n_left(), alg.n_right());
    for (std::size_t a = 0; a < alg.n_left(); ++a)
      for (std::size_t b = 0; b < alg.n_right(); ++b) u.set(a, b, table(j, a * alg.n_right() + b));
    cs.matrices.push_back(std::move(u));
  }
  cs.dim = rank(table);
  return cs;
}

std::size_t w_space_dim(const Matrix& L, const Matrix& R) {
  if (L.rows() != R.rows()) throw Error(ErrorKind::DimensionMismatch, "L and R row counts differ");
  const auto& f = L.field();
  Matrix w(f, L.rows(), L.cols() * R.cols());
  for (std::size_t i = 0; i < L.rows(); ++i)
    for (std::size_t a = 0; a < L.cols(); ++a)
      for (std::size_t b = 0; b < R.cols(); ++b) w.set(i, a * R.cols() + b, f.mul(L(i, a), R(i, b)));
  return rank(w);
}

namespace {

std::uint64_t square_scan_size(const LrpAlgorithm& alg) {
  const auto n = alg.n_left();
  if (alg.n_right() != n || alg.n_out() != n)
    throw Error(ErrorKind::DimensionMismatch, "algorithm is " + std::to_string(alg.n_left()) + "x" +
                                                  std::to_string(alg.n_right()) + "->" +
                                                  std::to_string(alg.n_out()) + ", not square");
  const auto size = bounded_pow(alg.field().q(), n, kSquareScanLimit);
  if (!size) throw Error(ErrorKind::TooLarge, "q^n exceeds " + std::to_string(kSquareScanLimit));
  return *size;
}

}  // namespace

bool is_presemifield(const LrpAlgorithm& alg) {
  const auto size = square_scan_size(alg);
  const auto& f = alg.field();
  const auto n = alg.n_left();
  std::vector<Vector> lx(size), ry(size);
  Vector v(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    digits(idx, f.q(), v);
    lx[idx] = matvec(alg.L(), v);
    ry[idx] = matvec(alg.R(), v);
  }
  Vector h(alg.rank());
  for (std::uint64_t a = 1; a < size; ++a)
    for (std::uint64_t b = 1; b < size; ++b) {
      for (std::size_t i = 0; i < h.size(); ++i) h[i] = f.mul(lx[a][i], ry[b][i]);
      const auto prod = matvec(alg.P(), h);
      if (std::all_of(prod.begin(), prod.end(), [](Scalar s) { return s == 0; })) return false;
    }
  return true;
}

bool spread_set_check(const LrpAlgorithm& alg) {
  const auto size = square_scan_size(alg);
  const auto& f = alg.field();
  const auto n = alg.n_left();
  const auto cs = contraction_space(alg);
  if (cs.dim != n) return false;
  Vector c(n);
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    digits(idx, f.q(), c);
    Matrix m(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m.set(a, b, f.add(m(a, b), f.mul(c[j], cs.matrices[j](a, b))));
    }
    if (rank(m) != n) return false;
  }
  return true;
}

std::optional<Vector> find_identity(const LrpAlgorithm& alg) {
  const auto size = square_scan_size(alg);
  const auto n = alg.n_left();
  Vector e(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    digits(idx, alg.field().q(), e);
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      Vector basis(n, 0);
      basis[k] = 1;
      ok = lrp_eval(alg, e, basis) == basis && lrp_eval(alg, basis, e) == basis;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace fsmul

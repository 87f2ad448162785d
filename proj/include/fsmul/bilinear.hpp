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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsmul/ff.hpp"
#include "fsmul/poly.hpp"
#include "fsmul/slp.hpp"

namespace fsmul {

/// Rank-r bilinear algorithm x*y = P((Lx) .* (Ry)).
class LrpAlgorithm {
 public:
  /// Throws DimensionMismatch unless L.rows == R.rows == P.cols and all three
  /// share one field.
  LrpAlgorithm(Matrix L, Matrix R, Matrix P);

  const FieldSpec& field() const noexcept { return L_.field(); }
  const Matrix& L() const noexcept { return L_; }
  const Matrix& R() const noexcept { return R_; }
  const Matrix& P() const noexcept { return P_; }
  std::size_t rank() const noexcept { return L_.rows(); }
  std::size_t n_left() const noexcept { return L_.cols(); }
  std::size_t n_right() const noexcept { return R_.cols(); }
  std::size_t n_out() const noexcept { return P_.rows(); }

  friend bool operator==(const LrpAlgorithm&, const LrpAlgorithm&) = default;

 private:
  Matrix L_, R_, P_;
};

/// P((Lx) .* (Ry)).  Throws DimensionMismatch.
Vector lrp_eval(const LrpAlgorithm& alg, std::span<const Scalar> x, std::span<const Scalar> y);

/// Ground-truth bilinear map.
class BilinearOracle {
 public:
  enum class Kind { PolyMul, ModPolyMul, Table };

  /// Product of polynomials of degrees <= deg_a and <= deg_b.
  static BilinearOracle poly_mul(const FieldSpec& f, std::size_t deg_a, std::size_t deg_b);
  /// a(X)*b(X) mod modulus, operands of degree < deg(modulus).  The modulus
  /// must be monic of degree >= 1; with check_irreducible a reducible
  /// modulus raises NotIrreducible.
  static BilinearOracle mod_poly_mul(const FieldSpec& f, const Polynomial& modulus,
                                     bool check_irreducible = true);
  /// out_k = sum_{i,j} table(k, i*n_right + j) x_i y_j.
  static BilinearOracle table(Matrix table, std::size_t n_left, std::size_t n_right);
  static BilinearOracle from_lrp(const LrpAlgorithm& alg);

  Kind kind() const noexcept { return kind_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t n_left() const noexcept { return n_left_; }
  std::size_t n_right() const noexcept { return n_right_; }
  std::size_t n_out() const noexcept { return n_out_; }
  const Polynomial& modulus() const noexcept { return modulus_; }
  /// Structure tensor as an n_out x (n_left*n_right) matrix.
  const Matrix& structure() const noexcept { return table_; }
  std::string describe() const;

  Vector operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;

 private:
  BilinearOracle(Kind kind, Matrix table, std::size_t n_left, std::size_t n_right, Polynomial modulus);
  Kind kind_;
  FieldSpec field_;
  std::size_t n_left_, n_right_, n_out_;
  Matrix table_;
  Polynomial modulus_;
};

/// Convenience wrapper around BilinearOracle::mod_poly_mul.
BilinearOracle oracle_from_modulus(const FieldSpec& f, const Polynomial& modulus,
                                   bool check_irreducible = true);

struct Mismatch {
  std::uint64_t index = 0;  // pair index in enumeration or sampling order
  Vector x, y, expected, actual;
};

struct VerifyReport {
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::optional<Mismatch> first_mismatch;
  std::uint64_t seed = 0;
  bool passed() const noexcept { return !first_mismatch; }
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed;
  std::size_t workers = 1;
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 24;
  std::uint64_t samples = 10000;
};

using BilinearFn = std::function<Vector(std::span<const Scalar>, std::span<const Scalar>)>;

// Exhaustive when q^(n_left+n_right) <= exhaustive_limit, otherwise seeded
// samples.  Pairs are checked in a fixed order and the report covers the
// prefix up to the first mismatch, so it does not depend on `workers`.
VerifyReport verify_fn(const BilinearFn& candidate, const BilinearOracle& oracle,
                       const VerifyOptions& options = {});
/// Throws DimensionMismatch when the shapes differ.
VerifyReport verify(const LrpAlgorithm& alg, const BilinearOracle& oracle,
                    const VerifyOptions& options = {});

// Generators.
/// Schoolbook product of two n-term polynomials: r = n^2, output 2n-1 terms.
LrpAlgorithm standard_poly_mul(const FieldSpec& f, std::size_t n);
/// Two-term Karatsuba with three products.
LrpAlgorithm karatsuba(const FieldSpec& f);
/// The 1x1 algorithm x*y.
LrpAlgorithm trivial_lrp(const FieldSpec& f);

/// Product of an m-term and a k-term polynomial multiplication algorithm
/// (Kronecker structure, outer blocks of width k).  Both operands are
/// verified first; NotPolyMul if either fails.
LrpAlgorithm compose_poly_mul(const LrpAlgorithm& outer, const LrpAlgorithm& inner,
                              const VerifyOptions& options = {});

/// (d+1) x (2d+1) matrix whose column i holds the coefficients of X^i mod I.
Matrix reduction_matrix(const FieldSpec& f, const Polynomial& modulus);
/// Folds the 2d+1 output rows of a polynomial product onto d+1 rows modulo
/// I (monic, degree d+1), row by row.  BadDegree when the shapes disagree,
/// NotIrreducible when check_irreducible and I factors.
Matrix fold(const Matrix& p, const Polynomial& modulus, bool check_irreducible = true);

struct IsotopyTriple {
  Matrix X, Y, Z;
};
/// (L X, R Y, Z P).  DimensionMismatch on shape errors, Singular when a map
/// is not invertible.
LrpAlgorithm isotopy_apply(const LrpAlgorithm& alg, const IsotopyTriple& t);

struct ContractionSpace {
  std::vector<Matrix> matrices;  // U_j = sum_i P[j,i] L_i^T R_i
  std::size_t dim = 0;
};
ContractionSpace contraction_space(const LrpAlgorithm& alg);
/// Dimension of the span of the r rank-one matrices L_i^T R_i.
std::size_t w_space_dim(const Matrix& L, const Matrix& R);

/// Limit on q^n for the square-algorithm scans below.
inline constexpr std::uint64_t kSquareScanLimit = 729;

/// No zero divisors: scans every pair of nonzero operands.
bool is_presemifield(const LrpAlgorithm& alg);
/// dim U == n and every nonzero combination of the contraction matrices is
/// invertible.
bool spread_set_check(const LrpAlgorithm& alg);
/// Two-sided identity, checked on the standard basis.
std::optional<Vector> find_identity(const LrpAlgorithm& alg);

/// Stitches three linear stage programs into one bilinear program with
/// inputs a*, b*, outputs c*, stage values l*, r*, products p*.  Throws
/// StageMismatch unless the stages compute L, R and P.
SlpProgram lrp_to_slp(const LrpAlgorithm& alg, const SlpProgram& l_prog,
                      const SlpProgram& r_prog, const SlpProgram& p_prog);
struct StagePrograms {
  SlpProgram l, r, p;
};
/// Splits a bilinear program into its left-linear, right-linear and post
/// stages; stage outputs follow the order of the product statements.  The
/// first n_left inputs are the left operand.  Throws NonBilinearProduct.
StagePrograms split_stages(const SlpProgram& prog, std::size_t n_left);
/// (L, R, P) read off the three stages of a bilinear program.
LrpAlgorithm lrp_from_slp(const SlpProgram& prog, const FieldSpec& f, std::size_t n_left);

/// Checks that every product multiplies a left-linear value by a
/// right-linear one (NonBilinearProduct otherwise) and that the program agrees
/// with lrp_eval.  The first n_left inputs are the left operand.
bool validate_lrp_slp(const SlpProgram& prog, const LrpAlgorithm& alg,
                      const VerifyOptions& options = {});

}  // namespace fsmul

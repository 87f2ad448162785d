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

#include <random>

#include "doctest.h"
#include "fsmul/ff.hpp"
#include "fsmul/random.hpp"
#include "test_util.hpp"

namespace fsmul {
namespace {

TEST_SUITE("ff") {

TEST_CASE("field axioms against integer arithmetic") {
  for (std::uint32_t q : {2u, 3u, 5u, 101u}) {
    const FieldSpec f(q);
    for (Scalar a = 0; a < std::min<Scalar>(q, 40); ++a) {
      for (Scalar b = 0; b < std::min<Scalar>(q, 40); ++b) {
        CHECK(f.add(a, b) == (a + b) % q);
        CHECK(f.mul(a, b) == (a * b) % q);
        CHECK(f.add(f.sub(a, b), b) == a);
      }
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
  CHECK(FieldSpec(3).symmetric(2) == -1);
  CHECK(FieldSpec(3).is_unit_sign(2));
  CHECK_FALSE(FieldSpec(5).is_unit_sign(2));
}

TEST_CASE("non-prime orders are rejected") {
  for (std::uint32_t q : {0u, 1u, 4u, 9u, 65536u}) CHECK_THROWS_AS(FieldSpec{q}, Error);
  CHECK(is_prime(65521));
}

TEST_CASE("inverse, rank and nullspace agree") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 7u}) {
    const FieldSpec f(q);
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_invertible(rng, f, 5);
      CHECK(matmul(m, invert(m)) == Matrix::identity(f, 5));
      const auto a = random_matrix(rng, f, 4, 7);
      const auto ns = nullspace(a);
      CHECK(ns.rows() + rank(a) == 7);
      for (std::size_t i = 0; i < ns.rows(); ++i) {
        const auto v = matvec(a, ns.row(i));
        CHECK(std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; }));
      }
    }
  }
  CHECK_THROWS_AS(invert(Matrix::from_rows(FieldSpec(3), {{1, 2}, {2, 1}})), Error);
}

TEST_CASE("solve_right recovers the coefficients") {
  std::mt19937_64 rng(11);
  const FieldSpec f(5);
  const auto a = random_invertible(rng, f, 4);
  const auto x = random_matrix(rng, f, 3, 4);
  CHECK(matmul(solve_right(a, matmul(x, a)), a) == matmul(x, a));
  const auto low = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}});
  CHECK_THROWS_AS(solve_right(low, Matrix::from_rows(f, {{0, 0, 1}})), Error);
}

TEST_CASE("kron matches the index formula") {
  const FieldSpec f(3);
  const auto a = Matrix::from_rows(f, {{1, 2}, {0, 1}});
  const auto b = Matrix::from_rows(f, {{1, 1, 0}, {2, 0, 1}});
  const auto k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(k(i, j) == f.mul(a(i / 2, j / 3), b(i % 2, j % 3)));
}

TEST_CASE("matrix text format round trips") {
  std::mt19937_64 rng(3);
  const auto m = random_matrix(rng, FieldSpec(7), 3, 5);
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK(parse_matrix("# comment\n2 2 3\n1 2\n2 1\n") == Matrix::from_rows(FieldSpec(3), {{1, 2}, {2, 1}}));
  CHECK_THROWS_AS(parse_matrix("2 2 3\n1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_matrix("2 2 3\n1 2\n"), Error);
}

}  // TEST_SUITE

}  // namespace
}  // namespace fsmul

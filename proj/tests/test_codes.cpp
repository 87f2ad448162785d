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

#include <numeric>
#include <random>

#include "doctest.h"
#include "fsmul/catalog.hpp"
#include "fsmul/codes.hpp"
#include "fsmul/random.hpp"
#include "test_util.hpp"

namespace fsmul {
namespace {

TEST_SUITE("codes") {

TEST_CASE("Gray-order minimum distance matches brute force") {
  std::mt19937_64 rng(9);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const FieldSpec f(q);
    for (int t = 0; t < 25; ++t) {
      const std::size_t k = 1 + rng() % (q == 5 ? 4 : 6), r = k + rng() % 6;
      const auto g = testing::random_matrix_nonzero(rng, f, k, r);
      if (rank(g) < k) continue;
      CHECK(min_distance(g) == testing::brute_min_distance(g));
    }
  }
  CHECK_THROWS_WITH_AS(min_distance(Matrix(FieldSpec(2), 2, 3)), doctest::Contains("ZeroMatrix"), Error);
  CHECK_THROWS_WITH_AS(min_distance(Matrix::identity(FieldSpec(2), 21)), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("parameter checks") {
  const auto golay = entry_generator(catalog_get("golay_L"), 3);
  CHECK(min_distance(golay) == 6);
  CHECK(check_params(golay, {12, 6, 6, 3}));
  CHECK_FALSE(check_params(golay, {12, 6, 7, 3}));
  CHECK_FALSE(check_params(golay, {12, 6, 6, 2}));
  const auto c844 = entry_generator(catalog_get("c844"), 2);
  CHECK(check_params(c844, {8, 4, 4, 2}));
  CHECK_FALSE(check_params(Matrix::from_rows(FieldSpec(2), {{1, 1}, {1, 1}}), {2, 2, 1, 2}));
}

TEST_CASE("Griesmer bound") {
  // sum_{i<k} ceil(d/q^i), computed by hand.
  CHECK(griesmer_min_length(2, 4, 4) == 4 + 2 + 1 + 1);
  CHECK(griesmer_min_length(3, 6, 6) == 6 + 2 + 1 + 1 + 1 + 1);
  CHECK(griesmer_min_length(2, 5, 5) == 5 + 3 + 2 + 1 + 1);
  CHECK(griesmer_min_length(3, 5, 5) == 5 + 2 + 1 + 1 + 1);
  for (const auto& e : catalog()) {
    if (!e.params) continue;
    for (auto q : e.code_fields) {
      const auto g = entry_generator(e, q);
      const auto& p = *e.params;
      if (check_params(g, {p.r, p.k, p.d, q})) CHECK(griesmer_min_length(q, p.k, p.d) <= p.r);
    }
  }
}

TEST_CASE("shortening") {
  const auto g = entry_generator(catalog_get("c844"), 2);
  const std::vector<std::size_t> pos{0, 1};
  const auto s = shorten(g, pos);
  CHECK(s.cols() == 6);
  // The subcode vanishing on two coordinates, checked by enumeration.
  std::size_t zero_on_pos = 0;
  for (unsigned m = 1; m < 16; ++m) {
    bool z = true;
    for (auto j : pos) {
      unsigned s_ = 0;
      for (unsigned i = 0; i < 4; ++i) s_ += ((m >> i) & 1) * g(i, j);
      z = z && s_ % 2 == 0;
    }
    zero_on_pos += z;
  }
  CHECK((std::size_t{1} << rank(s)) == zero_on_pos + 1);
  CHECK(rank(s) == 2);
  CHECK(min_distance(s) >= 4);
  const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK_THROWS_WITH_AS(shorten(g, all), doctest::Contains("EmptyCode"), Error);
}

TEST_CASE("monomial transforms keep the distance") {
  std::mt19937_64 rng(4);
  for (const auto& e : catalog()) {
    if (!e.params) continue;
    for (auto q : e.code_fields) {
      const FieldSpec f(q);
      const auto g = entry_generator(e, q);
      const auto d = min_distance(g);
      for (int t = 0; t < 50; ++t) {
        std::vector<std::size_t> perm(g.cols());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Scalar> diag(g.cols());
        for (auto& x : diag) x = 1 + static_cast<Scalar>(rng() % (q - 1));
        CHECK(min_distance(monomial_transform(g, perm, diag)) == d);
      }
    }
  }
  const auto g = Matrix::identity(FieldSpec(3), 2);
  const std::vector<std::size_t> perm{0, 1}, bad{0, 0};
  const std::vector<Scalar> zero{1, 0}, ones{1, 1};
  CHECK_THROWS_WITH_AS(monomial_transform(g, perm, zero), doctest::Contains("ZeroScale"), Error);
  CHECK_THROWS_AS(monomial_transform(g, bad, ones), Error);
}

}  // TEST_SUITE

}  // namespace
}  // namespace fsmul

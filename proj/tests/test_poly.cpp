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

#include "doctest.h"
#include "fsmul/poly.hpp"
#include "test_util.hpp"

namespace fsmul {
namespace {

TEST_SUITE("poly") {

TEST_CASE("irreducible counts follow Gauss's formula") {
  for (std::uint32_t q : {2u, 3u})
    for (int n = 1; n <= 6; ++n)
      CHECK(static_cast<std::int64_t>(monic_irreducibles(FieldSpec(q), n).size()) == testing::necklace_count(q, n));
  CHECK(monic_irreducibles(FieldSpec(3), 4).size() == 18);
  CHECK(monic_irreducibles(FieldSpec(2), 5).size() == 6);
}

TEST_CASE("irreducibility of named moduli") {
  const FieldSpec f2(2), f3(3);
  CHECK(is_irreducible(f3, parse_poly(f3, "1,2,0,0,0,1")));
  CHECK(is_irreducible(f2, parse_poly(f2, "1,0,1,0,0,1")));
  CHECK_FALSE(is_irreducible(f2, parse_poly(f2, "1,0,0,0,0,1")));  // (X+1) divides X^5+1
  CHECK_FALSE(is_irreducible(f3, parse_poly(f3, "2,0,1")));        // X^2-1
}

TEST_CASE("mul and mod against schoolbook division") {
  const FieldSpec f(3);
  const std::vector<std::int64_t> a{1, 2, 0, 1, 2}, b{2, 2, 1, 0, 1}, m{1, 2, 0, 0, 0, 1};
  const auto prod = poly_mul(f, make_poly(f, a), make_poly(f, b));
  const auto want = testing::schoolbook(a, b, 3);
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(prod[i] == want[i]);
  const auto rem = poly_mod(f, prod, make_poly(f, m));
  const auto want_rem = testing::reduce_mod(want, m, 3);
  for (std::size_t i = 0; i < want_rem.size(); ++i) CHECK((i < rem.size() ? rem[i] : 0) == want_rem[i]);
}

TEST_CASE("text forms") {
  const FieldSpec f(3);
  const auto p = parse_poly(f, "1,-1,0,0,0,1");
  CHECK(format_coeffs(p) == "1,2,0,0,0,1");
  CHECK(format_poly(f, p) == "X^5-X+1");
  CHECK(degree(p) == 5);
  CHECK(degree(Polynomial{}) == -1);
  CHECK_THROWS_AS(parse_poly(f, "1,x"), Error);
}

}  // TEST_SUITE

}  // namespace
}  // namespace fsmul

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
#include "fsmul/bilinear.hpp"
#include "fsmul/random.hpp"
#include "test_util.hpp"

namespace fsmul {
namespace {

std::vector<std::int64_t> as_ints(const Vector& v) { return {v.begin(), v.end()}; }

TEST_SUITE("bilinear") {

TEST_CASE("oracles agree with schoolbook arithmetic") {
  std::mt19937_64 rng(1);
  for (std::uint32_t q : {2u, 3u, 101u}) {
    const FieldSpec f(q);
    const auto pm = BilinearOracle::poly_mul(f, 3, 2);
    const auto mod = parse_poly(f, q == 2 ? "1,1,0,0,1" : "1,2,0,0,0,1");
    const auto mm = BilinearOracle::mod_poly_mul(f, mod, false);
    for (int t = 0; t < 50; ++t) {
      const auto x = random_vector(rng, f, 4), y = random_vector(rng, f, 3);
      const auto want = testing::schoolbook(as_ints(x), as_ints(y), q);
      CHECK(as_ints(pm(x, y)) == want);
      const auto n = mm.n_left();
      const auto a = random_vector(rng, f, n), b = random_vector(rng, f, n);
      std::vector<std::int64_t> m(mod.begin(), mod.end());
      CHECK(as_ints(mm(a, b)) == testing::reduce_mod(testing::schoolbook(as_ints(a), as_ints(b), q), m, q));
    }
  }
  CHECK_THROWS_AS(BilinearOracle::mod_poly_mul(FieldSpec(3), parse_poly(FieldSpec(3), "2,0,1")), Error);
}

TEST_CASE("generators verify") {
  for (std::uint32_t q : {2u, 3u, 101u}) {
    const FieldSpec f(q);
    CHECK(verify(karatsuba(f), BilinearOracle::poly_mul(f, 1, 1)).passed());
    for (std::size_t n = 1; n <= 4; ++n) CHECK(verify(standard_poly_mul(f, n), BilinearOracle::poly_mul(f, n - 1, n - 1)).passed());
    CHECK(verify(trivial_lrp(f), BilinearOracle::poly_mul(f, 0, 0)).passed());
  }
  const auto rep = verify(standard_poly_mul(FieldSpec(3), 3), BilinearOracle::poly_mul(FieldSpec(3), 2, 2));
  CHECK(rep.exhaustive);
  CHECK(rep.pairs_checked == 729);
}

TEST_CASE("a perturbed algorithm is caught and reported the same for any worker count") {
  const FieldSpec f(3);
  const auto k = standard_poly_mul(f, 3);
  Matrix p = k.P();
  p.set(2, 4, f.add(p(2, 4), 1));
  const LrpAlgorithm bad(k.L(), k.R(), p);
  const auto oracle = BilinearOracle::poly_mul(f, 2, 2);
  VerifyOptions one, four;
  four.workers = 4;
  const auto r1 = verify(bad, oracle, one), r4 = verify(bad, oracle, four);
  REQUIRE_FALSE(r1.passed());
  CHECK(r1.first_mismatch->index + 1 == r1.pairs_checked);
  CHECK(r1.first_mismatch->expected != r1.first_mismatch->actual);
  CHECK(r4.pairs_checked == r1.pairs_checked);
  CHECK(r4.first_mismatch->x == r1.first_mismatch->x);

  VerifyOptions sampled;
  sampled.exhaustive_limit = 1;
  sampled.samples = 500;
  const auto rs = verify(k, oracle, sampled);
  CHECK_FALSE(rs.exhaustive);
  CHECK(rs.pairs_checked == 500);
  CHECK_THROWS_AS(verify(k, BilinearOracle::poly_mul(f, 1, 1)), Error);
}

TEST_CASE("composition of Karatsuba with itself") {
  const FieldSpec f(3);
  const auto kk = compose_poly_mul(karatsuba(f), karatsuba(f));
  CHECK(kk.rank() == 9);
  CHECK(verify(kk, BilinearOracle::poly_mul(f, 3, 3)).passed());
  const auto ks = compose_poly_mul(karatsuba(f), standard_poly_mul(f, 3));
  CHECK(ks.rank() == 27);
  CHECK(verify(ks, BilinearOracle::poly_mul(f, 5, 5)).passed());
  const auto k = karatsuba(f);
  const LrpAlgorithm broken(k.L(), k.R(), Matrix::from_rows(f, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
  CHECK_THROWS_WITH_AS(compose_poly_mul(k, broken), doctest::Contains("NotPolyMul"), Error);
}

TEST_CASE("reduction matrix columns are powers of X") {
  const FieldSpec f(3);
  const std::vector<std::int64_t> m{1, 2, 0, 0, 0, 1};
  const auto red = reduction_matrix(f, make_poly(f, m));
  REQUIRE(red.rows() == 5);
  REQUIRE(red.cols() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    std::vector<std::int64_t> xi(i + 1, 0);
    xi[i] = 1;
    if (xi.size() < 6) xi.resize(6, 0);
    const auto want = testing::reduce_mod(xi, m, 3);
    for (std::size_t r = 0; r < 5; ++r) CHECK(red(r, i) == want[r]);
  }
}

TEST_CASE("folding gives field multiplication") {
  const FieldSpec f(2);
  const auto s = standard_poly_mul(f, 5);
  const auto mod = parse_poly(f, "1,0,1,0,0,1");
  const LrpAlgorithm folded(s.L(), s.R(), fold(s.P(), mod));
  CHECK(verify(folded, BilinearOracle::mod_poly_mul(f, mod)).passed());
  CHECK_THROWS_WITH_AS(fold(s.P(), parse_poly(f, "1,0,0,0,0,1")), doctest::Contains("NotIrreducible"), Error);
  CHECK_THROWS_WITH_AS(fold(s.P(), parse_poly(f, "1,1,1")), doctest::Contains("BadDegree"), Error);
}

TEST_CASE("isotopy acts as Z (Xx * Yy)") {
  std::mt19937_64 rng(5);
  const FieldSpec f(3);
  const auto mod = parse_poly(f, "1,0,1");  // X^2+1
  const auto s = standard_poly_mul(f, 2);
  const LrpAlgorithm field9(s.L(), s.R(), fold(s.P(), mod));
  const IsotopyTriple t{random_invertible(rng, f, 2), random_invertible(rng, f, 2), random_invertible(rng, f, 2)};
  const auto iso = isotopy_apply(field9, t);
  for (int k = 0; k < 20; ++k) {
    const auto x = random_vector(rng, f, 2), y = random_vector(rng, f, 2);
    CHECK(lrp_eval(iso, x, y) == matvec(t.Z, lrp_eval(field9, matvec(t.X, x), matvec(t.Y, y))));
  }
  CHECK(is_presemifield(iso));
  const IsotopyTriple singular{Matrix::from_rows(f, {{1, 1}, {1, 1}}), t.Y, t.Z};
  CHECK_THROWS_WITH_AS(isotopy_apply(field9, singular), doctest::Contains("Singular"), Error);
}

TEST_CASE("presemifield checks on fields and split algebras") {
  const FieldSpec f(3);
  const auto s = standard_poly_mul(f, 2);
  const LrpAlgorithm field9(s.L(), s.R(), fold(s.P(), parse_poly(f, "1,0,1")));
  const LrpAlgorithm split(s.L(), s.R(), fold(s.P(), parse_poly(f, "2,0,1"), false));
  CHECK(is_presemifield(field9));
  CHECK(spread_set_check(field9));
  CHECK_FALSE(is_presemifield(split));
  CHECK_FALSE(spread_set_check(split));
  CHECK(find_identity(field9) == Vector{1, 0});
  CHECK(contraction_space(field9).dim == 2);
  CHECK(w_space_dim(s.L(), s.R()) == 4);
}

TEST_CASE("stage splitting and stitching") {
  const FieldSpec f(3);
  const auto prog = parse_slp(
      "l0:=a0; l1:=a0-a1; l2:=a1; r0:=b0; r1:=b1-b0; r2:=b1; p0:=l0*r0; p1:=r1*l1; p2:=l2*r2; "
      "c0:=p0; c1:=p0+p1+p2; c2:=p2;");
  const auto alg = lrp_from_slp(prog, f, 2);
  CHECK(alg == karatsuba(f));
  const auto st = split_stages(prog, 2);
  CHECK(st.l.outputs() == std::vector<std::string>{"l0", "l1", "l2"});
  CHECK(st.r.outputs() == std::vector<std::string>{"r0", "r1", "r2"});
  const auto stitched = lrp_to_slp(alg, st.l, st.r, st.p);
  CHECK(stitched.inputs() == std::vector<std::string>{"a0", "a1", "b0", "b1"});
  CHECK(validate_lrp_slp(stitched, alg));
  CHECK(validate_lrp_slp(prog, alg));
  CHECK_THROWS_WITH_AS(lrp_to_slp(alg, st.r, st.l, st.p), doctest::Contains("StageMismatch"), Error);
  CHECK_THROWS_WITH_AS(split_stages(parse_slp("t:=a0+b0; p0:=t*b0; c0:=p0;"), 1), doctest::Contains("NonBilinearProduct"),
                       Error);
  CHECK_THROWS_WITH_AS(split_stages(parse_slp("p0:=a0*b0; c0:=p0+a0;"), 1), doctest::Contains("NonBilinearProduct"),
                       Error);
}

}  // TEST_SUITE

}  // namespace
}  // namespace fsmul

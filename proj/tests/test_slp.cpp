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
#include "fsmul/slp.hpp"
#include "test_util.hpp"

namespace fsmul {
namespace {

constexpr const char* kEq2 =
    "o0:=i0; o1:=i1; o2:=i2; o3:=i3; t4:=i0+i2; t5:=i1+i3; o4:=i1+t4; o5:=i0+t5; o6:=i3+t4; o7:=i2+t5;";

std::string error_of(const std::string& text) {
  try {
    parse_slp(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST_SUITE("slp") {

TEST_CASE("parse infers inputs and outputs") {
  const auto p = parse_slp(kEq2);
  CHECK(p.inputs() == std::vector<std::string>{"i0", "i1", "i2", "i3"});
  CHECK(p.outputs() == std::vector<std::string>{"o0", "o1", "o2", "o3", "o4", "o5", "o6", "o7"});
  CHECK(p.is_linear());
  CHECK(cost(p) == CostReport{0, 6, 0});
  // Rows by hand: o4 = i0+i1+i2, o5 = i0+i1+i3, o6 = i0+i2+i3, o7 = i1+i2+i3.
  const auto m = linear_matrix(p, FieldSpec(2));
  const auto want = Matrix::from_rows(FieldSpec(2), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                                     {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}});
  CHECK(m == want);
}

TEST_CASE("natural order puts a2 before a10") {
  CHECK(natural_less("a2", "a10"));
  CHECK_FALSE(natural_less("a10", "a2"));
  CHECK(natural_less("a9", "b0"));
  const auto p = parse_slp("c10:=a10+a2; c2:=a2;");
  CHECK(p.inputs() == std::vector<std::string>{"a2", "a10"});
  CHECK(p.outputs() == std::vector<std::string>{"c2", "c10"});
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_of("o0:=i0+;").find("line 1") != std::string::npos);
  CHECK(error_of("o0:=i0;\no1:=i1 i2;").find("line 2") != std::string::npos);
  CHECK(error_of("o0:=(i0+i1)*i2;").find("SyntaxError") == 0);
  CHECK(error_of("o0:=i0+1;").find("SyntaxError") == 0);
  CHECK(error_of("o0:=i0; o0:=i1;").find("ReassignedVariable") == 0);
  ParseOptions po;
  po.inputs = std::vector<std::string>{"i0"};
  CHECK_THROWS_WITH_AS(parse_slp("o0:=i0+i1;", po), doctest::Contains("UseBeforeDefine"), Error);
}

TEST_CASE("constants fold into coefficients") {
  const auto p = parse_slp("o0:=2*i0+i1*0-(i2-i0)*3;");
  const auto& s = std::get<LinearStmt>(p.statements()[0]);
  CHECK(s == LinearStmt{"o0", {{5, "i0"}, {-3, "i2"}}});
  CHECK(cost(p) == CostReport{0, 1, 2});
  // Over F_3 the coefficients become -1 and 0.
  CHECK(cost(p, FieldSpec(3)) == CostReport{0, 0, 0});
}

TEST_CASE("grouped printing round trips") {
  const auto p = parse_slp("c5:=k11-(k4+p9)*2-p12*3; c6:=c5;");
  const auto text = print_slp(p);
  CHECK(text.find("c5:=k11-(k4+p9)*2-p12*3;") != std::string::npos);
  CHECK(parse_slp(text) == p);
  const auto c = cost(p);
  CHECK(c.mul == 0);
  CHECK(c.add == 3);
  CHECK(c.sca == 2);
}

TEST_CASE("eval and the compiled evaluator agree") {
  const auto p = parse_slp("t:=a0+2*a1; p0:=t*b0; c0:=p0-a0; c1:=t;");
  const FieldSpec f(7);
  const auto out = eval(p, f, {{"a0", 3}, {"a1", 4}, {"b0", 5}});
  CHECK(out.at("c1") == (3 + 8) % 7);
  CHECK(out.at("c0") == ((11 % 7) * 5 % 7 + 7 - 3) % 7);
  const SlpEvaluator ev(p, f);
  const Vector in{3, 4, 5};
  CHECK(ev(in) == Vector{out.at("c0"), out.at("c1")});
  CHECK_THROWS_AS(eval(p, f, {{"a0", 1}}), Error);
  CHECK(p.product_count() == 1);
  CHECK_THROWS_AS(linear_matrix(p, f), Error);
}

TEST_CASE("transpose of the eight-output map") {
  const auto p = parse_slp(kEq2);
  const auto t = transpose_slp(p);
  CHECK(cost(t).add == 10);
  CHECK(linear_matrix(t, FieldSpec(2)) == transpose(linear_matrix(p, FieldSpec(2))));
}

TEST_CASE("transpose identity on random programs") {
  std::mt19937_64 rng(2026);
  const FieldSpec f(65521);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_linear_program(rng, 2 + rng() % 6, 3 + rng() % 10, {1, -1, 2, -3});
    const auto t = transpose_slp(p);
    const auto cp = cost(p), ct = cost(t);
    CHECK(ct.add + p.inputs().size() == cp.add + p.outputs().size());
    CHECK(ct.sca == cp.sca);
    CHECK(linear_matrix(t, f) == transpose(linear_matrix(p, f)));
    // Transposing twice gives back the map.
    CHECK(linear_matrix(transpose_slp(t), f) == linear_matrix(p, f));
  }
}

TEST_CASE("transpose rejects dead code and products") {
  CHECK_THROWS_WITH_AS(transpose_slp(parse_slp("t:=i0+i1; o0:=i0;")), doctest::Contains("DeadCode"), Error);
  ParseOptions po;
  po.inputs = std::vector<std::string>{"i0", "i1", "i2"};
  CHECK_THROWS_WITH_AS(transpose_slp(parse_slp("o0:=i0+i1;", po)), doctest::Contains("DeadCode"), Error);
  CHECK_THROWS_WITH_AS(transpose_slp(parse_slp("o0:=i0*i1;")), doctest::Contains("NotLinear"), Error);
}

TEST_CASE("eliminate_dead and rename") {
  const auto p = parse_slp("t:=i0+i1; u:=i0-i1; o0:=t+i0;");
  const auto q = eliminate_dead(p);
  CHECK(q.statements().size() == 2);
  CHECK(linear_matrix(q, FieldSpec(5)) == linear_matrix(p, FieldSpec(5)));
  const auto r = rename(q, {{"i0", "x"}, {"o0", "y"}});
  CHECK(r.inputs().front() == "x");
  CHECK(r.outputs() == std::vector<std::string>{"y"});
}

}  // TEST_SUITE

}  // namespace
}  // namespace fsmul

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
#include "fsmul/catalog.hpp"
#include "fsmul/random.hpp"
#include "fsmul/search.hpp"
#include "test_util.hpp"

namespace fsmul {
namespace {

Matrix code_map(const std::string& name, std::uint32_t q) {
  return linear_matrix(entry_program(catalog_get(name)), FieldSpec(q));
}

std::size_t ops(const CostReport& c) { return c.add + c.sca; }

// Exhaustive matrix-vector check, independent of verify_linear_program.
bool matches(const SlpProgram& prog, const Matrix& m) {
  const auto& f = m.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) total *= f.q();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vector x(m.cols());
    auto rest = idx;
    for (auto& v : x) {
      v = static_cast<Scalar>(rest % f.q());
      rest /= f.q();
    }
    std::map<std::string, Scalar> in;
    for (std::size_t i = 0; i < x.size(); ++i) in[prog.inputs()[i]] = x[i];
    const auto vals = eval(prog, f, in);
    const auto want = matvec(m, x);
    for (std::size_t j = 0; j < want.size(); ++j)
      if (vals.at(prog.outputs()[j]) != want[j]) return false;
  }
  return true;
}

TEST_SUITE("search") {

TEST_CASE("pair elimination on small maps") {
  SearchConfig cfg;
  cfg.trials = 50;
  const auto eq2 = code_map("c844", 2);
  const auto r = cse_optimize(eq2, cfg);
  CHECK(r.cost.add == 6);
  CHECK(matches(r.program, eq2));
  CHECK(ops(cse_optimize(Matrix::identity(FieldSpec(3), 5), cfg).cost) == 0);
  const auto kl = kron(karatsuba(FieldSpec(3)).L(), karatsuba(FieldSpec(3)).L());
  CHECK(best_slp(kl, cfg).cost.add == 5);
  CHECK(ops(best_slp(Matrix(FieldSpec(3), 3, 4), cfg).cost) == 0);
}

TEST_CASE("every method reproduces random matrices") {
  std::mt19937_64 rng(17);
  SearchConfig cfg;
  cfg.trials = 5;
  for (std::uint32_t q : {2u, 3u}) {
    const FieldSpec f(q);
    for (int t = 0; t < 20; ++t) {
      const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 6;
      auto m = random_matrix(rng, f, rows, cols);
      if (t % 4 == 0 && rows > 1) {  // force a repeated row
        for (std::size_t j = 0; j < cols; ++j) m.set(rows - 1, j, m(0, j));
      }
      cfg.seed = rng();
      const auto a = cse_optimize(m, cfg), b = kernel_decompose(m, cfg), c = best_slp(m, cfg);
      CHECK(matches(a.program, m));
      CHECK(matches(b.program, m));
      CHECK(matches(c.program, m));
      CHECK(verify_linear_program(c.program, m));
      CHECK(ops(c.cost) <= std::min(ops(a.cost), ops(b.cost)));
    }
  }
}

TEST_CASE("kernel decomposition reaches the short code program") {
  SearchConfig cfg;
  cfg.trials = 1000;
  const auto m = code_map("c1044", 2);
  const auto r = kernel_decompose(m, cfg);
  CHECK(r.cost.add == 4);
  CHECK(matches(r.program, m));
  CHECK(ops(kernel_decompose(Matrix::identity(FieldSpec(2), 4), cfg).cost) == 0);
}

TEST_CASE("results do not depend on the worker count") {
  const auto m = code_map("c1355", 2);
  SearchConfig cfg;
  cfg.trials = 64;
  const auto one = best_slp(m, cfg);
  cfg.workers = 4;
  const auto four = best_slp(m, cfg);
  CHECK(print_slp(one.program) == print_slp(four.program));
  CHECK(one.trial == four.trial);
  cfg.seed = 7;
  cfg.workers = 1;
  const auto a = sslp_random_search({9, 4, 4, 3}, cfg);
  cfg.workers = 3;
  const auto b = sslp_random_search({9, 4, 4, 3}, cfg);
  CHECK(a.L == b.L);
  CHECK(a.adds == b.adds);
}

TEST_CASE("randomized SSLP search") {
  SearchConfig cfg;
  cfg.trials = 2000;
  const auto w = sslp_random_search({9, 4, 4, 3}, cfg);
  CHECK(w.adds == 5);
  CHECK(check_params(transpose(w.L), {9, 4, 4, 3}));
  CHECK(cost(w.program, FieldSpec(3)).add == w.adds);
  CHECK(linear_matrix(w.program, FieldSpec(3)) == w.L);
  const auto w8 = sslp_random_search({8, 4, 4, 2}, cfg);
  CHECK(w8.adds == 6);
  CHECK_THROWS_WITH_AS(sslp_random_search({4, 4, 3, 2}, cfg), doctest::Contains("NotFound"), Error);
}

TEST_CASE("exhaustive SSLP search") {
  SearchConfig cfg;
  cfg.max_adds = 4;
  const auto found = sslp_exhaustive({10, 4, 4, 2}, cfg);
  REQUIRE(found.witness);
  CHECK(found.witness->adds <= 4);
  CHECK(check_params(transpose(found.witness->L), {10, 4, 4, 2}));
  cfg.max_adds = 2;
  const auto none = sslp_exhaustive({10, 4, 4, 2}, cfg);
  CHECK(none.proved_absent());
  CHECK(none.programs > 0);
  cfg.max_adds = 6;
  cfg.state_cap = 10;
  CHECK_THROWS_WITH_AS(sslp_exhaustive({8, 4, 4, 2}, cfg), doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("irreducible counts follow the necklace formula") {
  for (std::uint32_t q : {2u, 3u, 5u})
    for (int n = 1; n <= (q == 5 ? 4 : 6); ++n)
      CHECK(static_cast<std::int64_t>(irreducibles(FieldSpec(q), n).size()) == testing::necklace_count(q, n));
  CHECK(irreducibles(FieldSpec(3), 4).size() == 18);
  CHECK(irreducibles(FieldSpec(2), 5).size() == 6);
}

TEST_CASE("modulus sweep") {
  SearchConfig cfg;
  cfg.trials = 10;
  const auto rows = sweep_moduli(standard_poly_mul(FieldSpec(2), 3), cfg);
  CHECK(rows.size() == 2);
  for (const auto& r : rows) CHECK(r.verification.passed());
  CHECK(ops(rows.front().best.cost) <= ops(rows.back().best.cost));
}

}  // TEST_SUITE

}  // namespace
}  // namespace fsmul

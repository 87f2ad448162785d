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

#include <set>

#include "doctest.h"
#include "fsmul/catalog.hpp"
#include "fsmul/poly.hpp"

namespace fsmul {
namespace {

TEST_SUITE("catalog") {

TEST_CASE("every entry verifies") {
  const auto checks = catalog_verify_all();
  CHECK(checks.size() > 40);
  for (const auto& c : checks) {
    INFO(c.entry << " " << c.check << " " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("lookup") {
  CHECK(catalog_get("golay_L").kind == EntryKind::Code);
  CHECK_THROWS_WITH_AS(catalog_get("nope"), doctest::Contains("UnknownEntry"), Error);
  const auto names = catalog_names();
  const std::set<std::string> expected{"karatsuba_deg1", "montgomery_deg4", "S81_rank8", "F243_rank11",
                                       "S243_rank10",    "c844",            "c944",      "c1044",
                                       "c1355",          "golay_L"};
  CHECK(std::set<std::string>(names.begin(), names.end()) == expected);
}

TEST_CASE("listings survive printing") {
  for (const auto& e : catalog()) {
    if (e.program_text.empty()) continue;
    INFO(e.name);
    const auto p = entry_program(e);
    const auto again = parse_slp(print_slp(p), ParseOptions{.inputs = p.inputs(), .outputs = p.outputs()});
    CHECK(again == p);
    CHECK((e.integer_cost ? cost(p) : cost(p, FieldSpec(e.q))) == e.expected);
  }
}

TEST_CASE("bilinear listings match their matrices") {
  for (const auto& e : catalog()) {
    if (e.kind != EntryKind::Bilinear) continue;
    INFO(e.name);
    const auto alg = entry_lrp(e, e.q);
    CHECK(alg.n_left() == e.n_left);
    CHECK(alg.rank() == e.expected.mul);
    if (e.isotopy) {
      const auto t = entry_isotopy(e);
      CHECK(rank(t.X) == t.X.rows());
      CHECK(rank(t.Y) == t.Y.rows());
      CHECK(rank(t.Z) == t.Z.rows());
    }
  }
}

TEST_CASE("moduli and reference tables") {
  CHECK(catalog_moduli().size() == 7);
  for (const auto& m : catalog_moduli()) {
    INFO(m.name);
    const FieldSpec f(m.q);
    CHECK(is_irreducible(f, make_poly(f, m.coeffs)));
  }
  std::set<std::string> tables;
  for (const auto& r : reference_tables()) {
    tables.insert(r.table);
    CHECK(r.lo <= r.hi);
  }
  CHECK(tables.size() == 7);
}

}  // TEST_SUITE

}  // namespace
}  // namespace fsmul

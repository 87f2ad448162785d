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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsmul/bilinear.hpp"
#include "fsmul/codes.hpp"
#include "fsmul/ff.hpp"
#include "fsmul/slp.hpp"

namespace fsmul {

using IntRows = std::vector<std::vector<std::int64_t>>;

/// Reference oracle for a bilinear entry: polynomial product of two operands
/// of degree `degree`, reduced modulo `modulus` when one is given.
struct OracleSpec {
  std::uint32_t q = 2;
  std::size_t degree = 0;
  std::vector<std::int64_t> modulus;  // constant term first; empty for PolyMul
  std::uint64_t samples = 0;          // 0 keeps the VerifyOptions default

  BilinearOracle make() const;
};

enum class EntryKind { Bilinear, Code };

struct CatalogEntry {
  std::string name;
  std::string description;
  EntryKind kind = EntryKind::Bilinear;
  std::uint32_t q = 2;  // field the listing is stated over

  std::string program_text;  // verbatim listing; empty when there is none
  std::vector<std::string> inputs;
  std::size_t n_left = 0;

  // Costs are counted over the integers when integer_cost is set, else over F_q.
  CostReport expected;
  bool integer_cost = false;
  std::optional<std::array<std::size_t, 3>> stage_adds;  // L + R + P
  std::size_t p_sca = 0;

  std::vector<OracleSpec> oracles;

  bool presemifield = false;
  std::optional<bool> has_identity;
  std::optional<std::array<IntRows, 3>> isotopy;  // X, Y, Z

  // Code entries: k x r generator, rows as printed.
  IntRows generator;
  std::optional<CodeParams> params;
  std::vector<std::uint32_t> code_fields;
  /// dim span{L_i^T L_i} for the rows L_i of the transposed generator.
  std::optional<std::size_t> self_contraction_dim;
};

SlpProgram entry_program(const CatalogEntry& e);
/// (L, R, P) of a bilinear entry over F_q.
LrpAlgorithm entry_lrp(const CatalogEntry& e, std::uint32_t q);
/// Generator of a code entry over F_q.
Matrix entry_generator(const CatalogEntry& e, std::uint32_t q);
IsotopyTriple entry_isotopy(const CatalogEntry& e);

const std::vector<CatalogEntry>& catalog();
/// Throws UnknownEntry.
const CatalogEntry& catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

struct NamedModulus {
  std::string name;
  std::uint32_t q;
  std::vector<std::int64_t> coeffs;  // constant term first, monic
  std::string use;
};
const std::vector<NamedModulus>& catalog_moduli();

/// Published values kept as metadata only; nothing here is recomputed.
/// Exact values have lo == hi; an upper bound alone has lo == 0.
struct ReferenceRecord {
  std::string table;
  std::string object;
  std::string quantity;
  std::int64_t lo = 0, hi = 0;
  std::string text;
};
const std::vector<ReferenceRecord>& reference_tables();

struct CatalogCheck {
  std::string entry;
  std::string check;
  bool passed = false;
  std::string detail;
};

std::vector<CatalogCheck> catalog_verify(const CatalogEntry& e, const VerifyOptions& options = {});
std::vector<CatalogCheck> catalog_verify_all(const VerifyOptions& options = {});

}  // namespace fsmul

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
#include <optional>
#include <string>
#include <vector>

#include "fsmul/bilinear.hpp"
#include "fsmul/codes.hpp"
#include "fsmul/ff.hpp"
#include "fsmul/poly.hpp"
#include "fsmul/slp.hpp"

namespace fsmul {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct SearchConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 100;
  std::size_t max_adds = 6;
  bool distinct_columns = false;
  /// Row pool of the randomized SSLP search, unit rows included; 0 means r+k.
  std::size_t r_max = 0;
  std::size_t workers = 1;
  /// Hard cap on canonical states visited by the exhaustive SSLP search.
  std::uint64_t state_cap = 20'000'000;
};

struct OptResult {
  SlpProgram program;
  CostReport cost;         // over the matrix field
  std::string method;      // "cse", "kernel" or "transpose"
  std::size_t trial = 0;   // trial that produced the program
};

// Linear-map synthesis.  All results satisfy linear_matrix(program) == m
// and depend only on (m, cfg.seed, cfg.trials), not on cfg.workers.  Cost is
// compared on add+sca, then statement count, then discovery order.

/// Greedy pair elimination: repeatedly replace the pair (x_a, lambda*x_b)
/// shared by the most rows with a temporary; ties broken at random.
OptResult cse_optimize(const Matrix& m, const SearchConfig& cfg, const SlpNames& names = {});
/// Randomized kernel decomposition: split rows into an independent block G,
/// a directly computed block R and a block S recovered from G and canonical
/// inputs, optimizing each part with the pair elimination.
OptResult kernel_decompose(const Matrix& m, const SearchConfig& cfg, const SlpNames& names = {});
/// Best of cse_optimize and kernel_decompose.  With use_transpose, also
/// synthesizes m^T and transposes the result when m has no zero row or column.
OptResult best_slp(const Matrix& m, const SearchConfig& cfg, const SlpNames& names = {},
                   bool use_transpose = true);

/// Program check by evaluation: exhaustive over F_q^n for n <= 10, else
/// 10^4 seeded samples; also compares linear_matrix.
bool verify_linear_program(const SlpProgram& prog, const Matrix& m, std::uint64_t seed = kDefaultSeed);

// Small straight-line programs for code generators.  A program starts from
// the k unit vectors and appends rows x +- y of earlier rows; its r outputs
// pick rows (repeats free) so that L^T generates an [r, k, d]_q code.

struct SslpWitness {
  Matrix L;             // r x k, rows are the program outputs
  SlpProgram program;   // inputs i*, outputs o*
  std::size_t adds = 0;
  std::size_t trial = 0;
};

/// Grows cfg.r_max rows at random (a sum or difference of two rows, or a
/// repeat), then scans r-row selections.  Best over cfg.trials; NotFound if
/// no selection meets d.
SslpWitness sslp_random_search(const CodeParams& p, const SearchConfig& cfg);

struct SslpExhaustiveResult {
  std::optional<SslpWitness> witness;
  /// Canonical row sets (programs up to statement order) examined.
  std::uint64_t programs = 0;
  bool proved_absent() const noexcept { return !witness; }
};

/// Every program with at most cfg.max_adds additions, deduplicated by its
/// set of rows (each normalized so its first nonzero entry is 1).  With
/// cfg.distinct_columns, outputs must be pairwise distinct rows.  Returns
/// the cheapest witness or a proof of absence; BudgetExceeded past
/// cfg.state_cap states.
SslpExhaustiveResult sslp_exhaustive(const CodeParams& p, const SearchConfig& cfg);

/// All monic irreducibles of the given degree (degree <= 8).
std::vector<Polynomial> irreducibles(const FieldSpec& field, int degree);

struct SweepRow {
  Polynomial modulus;
  OptResult best;           // program for the folded P
  VerifyReport verification;  // folded LRP against the modulus oracle
};

/// Folds the P matrix of a polynomial-product algorithm with every monic
/// irreducible of the matching degree, verifies each folded algorithm and
/// optimizes its P.  Rows sorted by ascending P cost (stable in modulus
/// enumeration order).
std::vector<SweepRow> sweep_moduli(const LrpAlgorithm& alg, const SearchConfig& cfg,
                                   const VerifyOptions& verify_options = {});

}  // namespace fsmul

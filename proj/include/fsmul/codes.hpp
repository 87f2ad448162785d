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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fsmul/ff.hpp"

namespace fsmul {

/// [r, k, d]_q
struct CodeParams {
  std::size_t r = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::uint32_t q = 2;
  std::string to_string() const;
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline constexpr std::size_t kMaxCodeDimension = 20;

/// Minimum weight of a nonzero codeword in the row space of g (k x r).
/// Walks the message space in modular Gray order, one row update per step.
/// Throws ZeroMatrix for g == 0 and TooLarge for k > 20.
std::size_t min_distance(const Matrix& g);

/// rank(g) == k, g.cols == r, q matches and min_distance(g) >= d.
bool check_params(const Matrix& g, const CodeParams& p);

/// sum_{i<k} ceil(d / q^i).
std::size_t griesmer_min_length(std::uint32_t q, std::size_t k, std::size_t d);

/// Generator of the subcode vanishing on `positions`, with those coordinates
/// removed.  EmptyCode when only the zero word survives.
Matrix shorten(const Matrix& g, std::span<const std::size_t> positions);

/// Column j of the result is diag[j] times column perm[j] of g.  ZeroScale
/// for a zero entry in diag, InvalidArgument when perm is not a permutation.
Matrix monomial_transform(const Matrix& g, std::span<const std::size_t> perm,
                          std::span<const Scalar> diag);

}  // namespace fsmul

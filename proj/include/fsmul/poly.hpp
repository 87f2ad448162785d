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

#include <string>
#include <string_view>
#include <vector>

#include "fsmul/ff.hpp"

namespace fsmul {

// Coefficient vector, index = degree (constant term first).  Trailing zeros
// are trimmed by every function returning a Polynomial.
using Polynomial = std::vector<Scalar>;

Polynomial make_poly(const FieldSpec& f, const std::vector<std::int64_t>& coeffs);
Polynomial trim(Polynomial p);
/// -1 for the zero polynomial.
int degree(const Polynomial& p);
bool is_monic(const Polynomial& p);

Polynomial poly_mul(const FieldSpec& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const FieldSpec& f, const Polynomial& a, const Polynomial& modulus);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const FieldSpec& f, const Polynomial& p);
/// All monic irreducibles of the given degree, in increasing base-q order of
/// their low coefficients.
std::vector<Polynomial> monic_irreducibles(const FieldSpec& f, int degree);

/// "1,2,0,0,0,1" (negative entries allowed, reduced mod q).
Polynomial parse_poly(const FieldSpec& f, std::string_view text);
/// Comma-separated residues, constant term first.
std::string format_coeffs(const Polynomial& p);
/// Human form with symmetric coefficients, e.g. "X^5-X+1".
std::string format_poly(const FieldSpec& f, const Polynomial& p);

}  // namespace fsmul

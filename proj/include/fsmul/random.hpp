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
#include <random>

#include "fsmul/ff.hpp"

namespace fsmul {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Independent stream for (seed, a, b): trial t of method m gets its own
/// generator, so results do not depend on how trials are spread over threads.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return Rng(splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0x2545f4914f6cdd1dull)));
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline Vector random_vector(Rng& rng, const FieldSpec& f, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = static_cast<Scalar>(rng() % f.q());
  return v;
}

Matrix random_matrix(Rng& rng, const FieldSpec& f, std::size_t rows, std::size_t cols);
/// Uniform over invertible matrices (rejection sampling).
Matrix random_invertible(Rng& rng, const FieldSpec& f, std::size_t n);

}  // namespace fsmul

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

// Independent reference computations for the tests.  Nothing here calls
// into the library's algorithms beyond the basic containers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fsmul/ff.hpp"
#include "fsmul/slp.hpp"

namespace fsmul::testing {

inline std::int64_t mod(std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; }

/// Schoolbook product of two coefficient vectors over F_q.
inline std::vector<std::int64_t> schoolbook(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                            std::int64_t q) {
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod(c[i + j] + a[i] * b[j], q);
  return c;
}

/// Remainder of c modulo a monic m by long division.
inline std::vector<std::int64_t> reduce_mod(std::vector<std::int64_t> c, const std::vector<std::int64_t>& m,
                                            std::int64_t q) {
  const std::size_t d = m.size() - 1;
  for (std::size_t k = c.size(); k-- > d;) {
    const auto lead = c[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) c[k - d + j] = mod(c[k - d + j] - lead * m[j], q);
  }
  c.resize(d);
  return c;
}

/// Weight of every codeword x*G, found by enumerating all q^k messages.
inline std::size_t brute_min_distance(const Matrix& g) {
  const std::uint32_t q = g.field().q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.rows(); ++i) total *= q;
  std::size_t best = g.cols() + 1;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::vector<std::uint64_t> msg(g.rows());
    auto t = idx;
    for (auto& x : msg) {
      x = t % q;
      t /= q;
    }
    std::size_t w = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < g.rows(); ++i) s += msg[i] * g(i, j);
      w += s % q != 0;
    }
    if (w > 0 && w < best) best = w;
  }
  return best;
}

/// Number of monic irreducibles of degree n over F_q (Gauss's formula).
inline std::int64_t necklace_count(std::int64_t q, int n) {
  auto mobius = [](int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
      if (k % p) continue;
      k /= p;
      if (k % p == 0) return 0;
      result = -result;
    }
    return k > 1 ? -result : result;
  };
  std::int64_t sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::int64_t p = 1;
    for (int i = 0; i < n / d; ++i) p *= q;
    sum += mobius(d) * p;
  }
  return sum / n;
}

/// Random linear program over `inputs` variables: each statement combines
/// two or three earlier values with coefficients from `coeffs`.  Every
/// statement that is never read becomes an output, plus a few more.
inline SlpProgram random_linear_program(std::mt19937_64& rng, std::size_t inputs, std::size_t statements,
                                        const std::vector<std::int64_t>& coeffs = {1, -1}) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < inputs; ++i) names.push_back("i" + std::to_string(i));
  std::vector<bool> used(inputs + statements, false);
  std::vector<Statement> stmts;
  for (std::size_t s = 0; s < statements; ++s) {
    const std::size_t avail = names.size();
    const std::size_t arity = 2 + rng() % 2;
    LinearStmt st{"t" + std::to_string(s), {}};
    std::vector<std::size_t> picked;
    while (picked.size() < std::min(arity, avail)) {
      // Prefer unused values so that every input ends up read.
      std::size_t v = rng() % avail;
      for (std::size_t k = 0; k < avail; ++k)
        if (!used[k] && rng() % 2) {
          v = k;
          break;
        }
      if (std::find(picked.begin(), picked.end(), v) != picked.end()) continue;
      picked.push_back(v);
      used[v] = true;
      st.terms.push_back({coeffs[rng() % coeffs.size()], names[v]});
    }
    names.push_back(st.dst);
    stmts.emplace_back(std::move(st));
  }
  std::vector<std::string> outs;
  for (std::size_t v = inputs; v < names.size(); ++v)
    if (!used[v] || rng() % 4 == 0) outs.push_back(names[v]);
  for (std::size_t i = 0; i < inputs; ++i)
    if (!used[i]) outs.push_back(names[i]);
  std::vector<std::string> ins(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(inputs));
  return SlpProgram(ins, std::move(stmts), outs);
}

inline Matrix random_matrix_nonzero(std::mt19937_64& rng, const FieldSpec& f, std::size_t rows, std::size_t cols) {
  for (;;) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<Scalar>(rng() % f.q()));
    bool ok = true;
    for (std::size_t i = 0; i < rows && ok; ++i) ok = m.row_weight(i) > 0;
    for (std::size_t j = 0; j < cols && ok; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < rows; ++i) any = any || m(i, j) != 0;
      ok = any;
    }
    if (ok) return m;
  }
}

}  // namespace fsmul::testing

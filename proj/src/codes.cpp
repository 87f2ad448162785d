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

#include "fsmul/codes.hpp"

#include <algorithm>

namespace fsmul {

std::string CodeParams::to_string() const {
  return "[" + std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(d) + "]_" +
         std::to_string(q);
}

std::size_t min_distance(const Matrix& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroMatrix, "minimum distance of the zero code");
  const auto k = g.rows(), r = g.cols();
  if (k > kMaxCodeDimension)
    throw Error(ErrorKind::TooLarge, "dimension " + std::to_string(k) + " exceeds " +
                                         std::to_string(kMaxCodeDimension));
  const auto& f = g.field();
  const auto q = f.q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;

  // Base-q counter; the Gray digit that moves at step n is the number of
  // trailing (q-1) digits of n, and it moves by +1.
  std::vector<Scalar> counter(k + 1, 0);
  Vector word(r, 0);
  std::size_t best = r + 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t t = 0;
    while (counter[t] == q - 1) counter[t++] = 0;
    ++counter[t];
    const auto row = g.row(t);
    std::size_t weight = 0;
    for (std::size_t j = 0; j < r; ++j) {
      word[j] = f.add(word[j], row[j]);
      weight += word[j] != 0;
    }
    if (weight != 0) best = std::min(best, weight);
  }
  return best;
}

bool check_params(const Matrix& g, const CodeParams& p) {
  if (g.field().q() != p.q || g.cols() != p.r || g.rows() != p.k) return false;
  if (rank(g) != p.k) return false;
  return min_distance(g) >= p.d;
}

std::size_t griesmer_min_length(std::uint32_t q, std::size_t k, std::size_t d) {
  std::size_t total = 0;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += static_cast<std::size_t>((d + qi - 1) / qi);
    if (qi <= d) qi *= q;  // once q^i exceeds d every later term is 1
  }
  return total;
}

Matrix shorten(const Matrix& g, std::span<const std::size_t> positions) {
  const auto& f = g.field();
  std::vector<bool> drop(g.cols(), false);
  for (auto p : positions) {
    if (p >= g.cols()) throw Error(ErrorKind::InvalidArgument, "position " + std::to_string(p) + " out of range");
    drop[p] = true;
  }
  std::vector<std::size_t> kept_cols, drop_cols;
  for (std::size_t j = 0; j < g.cols(); ++j) (drop[j] ? drop_cols : kept_cols).push_back(j);

  // Messages m with m * G_S == 0 form the null space of G_S^T.
  Matrix gs_t(f, drop_cols.size(), g.rows());
  for (std::size_t a = 0; a < drop_cols.size(); ++a)
    for (std::size_t i = 0; i < g.rows(); ++i) gs_t.set(a, i, g(i, drop_cols[a]));
  const auto messages = nullspace(gs_t);
  const auto words = matmul(messages, g);

  Matrix out(f, words.rows(), kept_cols.size());
  for (std::size_t i = 0; i < words.rows(); ++i)
    for (std::size_t a = 0; a < kept_cols.size(); ++a) out.set(i, a, words(i, kept_cols[a]));
  if (out.rows() == 0 || out.is_zero()) throw Error(ErrorKind::EmptyCode, "shortened code is zero");
  return out;
}

Matrix monomial_transform(const Matrix& g, std::span<const std::size_t> perm, std::span<const Scalar> diag) {
  const auto r = g.cols();
  if (perm.size() != r || diag.size() != r)
    throw Error(ErrorKind::DimensionMismatch, "transform size differs from code length");
  std::vector<bool> seen(r, false);
  for (auto p : perm) {
    if (p >= r || seen[p]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
    seen[p] = true;
  }
  const auto& f = g.field();
  for (auto s : diag)
    if (s % f.q() == 0) throw Error(ErrorKind::ZeroScale, "zero scale factor");
  Matrix out(f, g.rows(), r);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) out.set(i, j, f.mul(diag[j] % f.q(), g(i, perm[j])));
  return out;
}

}  // namespace fsmul

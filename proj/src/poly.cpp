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

#include "fsmul/poly.hpp"

#include <sstream>

namespace fsmul {

Polynomial trim(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Polynomial make_poly(const FieldSpec& f, const std::vector<std::int64_t>& coeffs) {
  Polynomial p;
  p.reserve(coeffs.size());
  for (auto c : coeffs) p.push_back(f.reduce(c));
  return trim(std::move(p));
}

int degree(const Polynomial& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

bool is_monic(const Polynomial& p) {
  const int d = degree(p);
  return d >= 0 && p[static_cast<std::size_t>(d)] == 1;
}

Polynomial poly_mul(const FieldSpec& f, const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return trim(std::move(c));
}

Polynomial poly_mod(const FieldSpec& f, const Polynomial& a, const Polynomial& modulus) {
  const int dm = degree(modulus);
  if (dm < 0) throw Error(ErrorKind::InvalidArgument, "reduction by the zero polynomial");
  Polynomial r = trim(a);
  const Scalar lead_inv = f.inv(modulus[static_cast<std::size_t>(dm)]);
  for (int d = degree(r); d >= dm; d = degree(r)) {
    const Scalar factor = f.mul(r[static_cast<std::size_t>(d)], lead_inv);
    const auto shift = static_cast<std::size_t>(d - dm);
    for (int i = 0; i <= dm; ++i) {
      auto& slot = r[shift + static_cast<std::size_t>(i)];
      slot = f.sub(slot, f.mul(factor, modulus[static_cast<std::size_t>(i)]));
    }
    r = trim(std::move(r));
  }
  return r;
}

namespace {

// Monic polynomial of the given degree whose low coefficients are the base-q
// digits of `index`.
Polynomial nth_monic(const FieldSpec& f, int deg, std::uint64_t index) {
  Polynomial p(static_cast<std::size_t>(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    p[static_cast<std::size_t>(i)] = static_cast<Scalar>(index % f.q());
    index /= f.q();
  }
  p[static_cast<std::size_t>(deg)] = 1;
  return p;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(const FieldSpec& f, const Polynomial& p) {
  const int d = degree(p);
  if (d < 1) return false;
  for (int dd = 1; dd <= d / 2; ++dd) {
    const auto count = ipow(f.q(), dd);
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (degree(poly_mod(f, p, nth_monic(f, dd, idx))) < 0) return false;
  }
  return true;
}

std::vector<Polynomial> monic_irreducibles(const FieldSpec& f, int deg) {
  if (deg < 1) throw Error(ErrorKind::BadDegree, "degree must be positive");
  if (deg > 8) throw Error(ErrorKind::TooLarge, "degree above 8");
  std::vector<Polynomial> out;
  const auto count = ipow(f.q(), deg);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto p = nth_monic(f, deg, idx);
    if (is_irreducible(f, p)) out.push_back(std::move(p));
  }
  return out;
}

Polynomial parse_poly(const FieldSpec& f, std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadFormat, "bad polynomial coefficient '" + item + "'");
    }
  }
  if (coeffs.empty()) throw Error(ErrorKind::BadFormat, "empty polynomial");
  return make_poly(f, coeffs);
}

std::string format_coeffs(const Polynomial& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s.empty() ? "0" : s;
}

std::string format_poly(const FieldSpec& f, const Polynomial& p) {
  std::string s;
  for (int i = degree(p); i >= 0; --i) {
    const auto c = f.symmetric(p[static_cast<std::size_t>(i)]);
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (mag != 1 || i == 0) s += std::to_string(mag);
    if (i >= 1) s += 'X';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace fsmul

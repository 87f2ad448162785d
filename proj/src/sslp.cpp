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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "fsmul/parallel.hpp"
#include "fsmul/random.hpp"
#include "fsmul/search.hpp"

namespace fsmul {
namespace {

constexpr std::uint64_t kTagSslp = 7;
constexpr std::size_t kMaxSslpDimension = 8;

// How a row was obtained: an input, lambda*(row a + s*row b), or a repeat.
struct RowDef {
  enum Kind { Input, Sum, Repeat } kind;
  Vector v;
  std::size_t a = 0, b = 0;
  std::int64_t s = 1, lambda = 1;
};

// Nonzero messages up to scalars: first nonzero coordinate equal to 1.
std::vector<Vector> projective_messages(const FieldSpec& f, std::size_t k) {
  std::vector<Vector> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= f.q();
  Vector m(k);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    auto v = idx;
    for (auto& d : m) {
      d = static_cast<Scalar>(v % f.q());
      v /= f.q();
    }
    if (*std::find_if(m.begin(), m.end(), [](Scalar s) { return s != 0; }) == 1) out.push_back(m);
  }
  return out;
}

// nz[msg] = 1 when the row has nonzero inner product with the message, i.e.
// contributes to that codeword's weight.
std::vector<std::uint8_t> support_mask(const FieldSpec& f, const Vector& row, const std::vector<Vector>& msgs) {
  std::vector<std::uint8_t> nz(msgs.size());
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) acc = f.add(acc, f.mul(row[j], msgs[i][j]));
    nz[i] = acc != 0;
  }
  return nz;
}

Vector normalized(const FieldSpec& f, Vector v, std::int64_t* lambda = nullptr) {
  auto it = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
  if (it == v.end()) return v;
  const auto inv = f.inv(*it);
  for (auto& x : v) x = f.mul(x, inv);
  if (lambda) *lambda = f.symmetric(inv);
  return v;
}

std::size_t closure_adds(const std::vector<RowDef>& rows, const std::vector<std::size_t>& chosen) {
  std::vector<bool> need(rows.size(), false);
  std::vector<std::size_t> stack(chosen.begin(), chosen.end());
  std::size_t adds = 0;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    if (need[i]) continue;
    need[i] = true;
    if (rows[i].kind == RowDef::Sum) {
      ++adds;
      stack.push_back(rows[i].a);
      stack.push_back(rows[i].b);
    } else if (rows[i].kind == RowDef::Repeat) {
      stack.push_back(rows[i].a);
    }
  }
  return adds;
}

SslpWitness make_witness(const FieldSpec& f, std::size_t k, const std::vector<RowDef>& rows,
                         const std::vector<std::size_t>& chosen) {
  auto base = [&](std::size_t i) {
    while (rows[i].kind == RowDef::Repeat) i = rows[i].a;
    return i;
  };
  std::vector<bool> need(rows.size(), false);
  std::vector<std::size_t> stack;
  for (auto c : chosen) stack.push_back(base(c));
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    if (need[i]) continue;
    need[i] = true;
    if (rows[i].kind == RowDef::Sum) {
      stack.push_back(base(rows[i].a));
      stack.push_back(base(rows[i].b));
    }
  }
  std::vector<std::string> name(rows.size()), inputs, outputs;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].kind == RowDef::Input) name[i] = "i" + std::to_string(rows[i].a);
  for (std::size_t x = 0; x < k; ++x) inputs.push_back("i" + std::to_string(x));
  std::vector<std::pair<std::string, std::size_t>> copies;
  for (std::size_t o = 0; o < chosen.size(); ++o) {
    const auto b = base(chosen[o]);
    auto out = "o" + std::to_string(o);
    if (rows[b].kind == RowDef::Sum && name[b].empty())
      name[b] = out;
    else
      copies.emplace_back(out, b);
    outputs.push_back(std::move(out));
  }
  std::size_t temp = 0;
  std::vector<Statement> stmts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!need[i] || rows[i].kind != RowDef::Sum) continue;
    if (name[i].empty()) name[i] = "t" + std::to_string(temp++);
    const auto& r = rows[i];
    stmts.emplace_back(LinearStmt{name[i], {{r.lambda, name[base(r.a)]}, {r.lambda * r.s, name[base(r.b)]}}});
  }
  for (const auto& [out, b] : copies) stmts.emplace_back(LinearStmt{out, {{1, name[b]}}});

  Matrix L(f, chosen.size(), k);
  for (std::size_t o = 0; o < chosen.size(); ++o)
    for (std::size_t j = 0; j < k; ++j) L.set(o, j, rows[chosen[o]].v[j]);
  SslpWitness w{L, SlpProgram(inputs, std::move(stmts), outputs), 0, 0};
  w.adds = cost(w.program, f).add;
  if (!(linear_matrix(w.program, f) == L))
    throw Error(ErrorKind::InvalidArgument, "witness program does not compute its generator");
  return w;
}

void check_params_shape(const CodeParams& p, const FieldSpec& f) {
  if (p.k < 1 || p.k > kMaxSslpDimension) throw Error(ErrorKind::TooLarge, "SSLP search needs 1 <= k <= 8");
  if (p.r < p.k || p.d < 1 || p.d > p.r) throw Error(ErrorKind::InvalidArgument, "bad parameters " + p.to_string());
  (void)f;
}

// Selection of r rows (indices into masks, with multiplicities unless
// distinct) whose code reaches distance d.  Depth-first, rows in index order.
class CoverSearch {
 public:
  CoverSearch(const std::vector<std::vector<std::uint8_t>>& masks, std::size_t r, std::size_t d, bool distinct)
      : masks_(masks), r_(r), d_(d), distinct_(distinct) {
    if (!masks.empty()) cover_.assign(masks[0].size(), 0);
    // suffix_any[j][m]: some row >= j covers message m
    suffix_any_.assign(masks.size() + 1, std::vector<std::uint8_t>(cover_.size(), 0));
    for (std::size_t j = masks.size(); j-- > 0;)
      for (std::size_t m = 0; m < cover_.size(); ++m) suffix_any_[j][m] = suffix_any_[j + 1][m] | masks[j][m];
  }

  std::optional<std::vector<std::size_t>> run() {
    if (masks_.empty()) return std::nullopt;
    if (dfs(0, r_)) return picked_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t j, std::size_t left) {
    if (left == 0) {
      return std::all_of(cover_.begin(), cover_.end(), [&](std::size_t c) { return c >= d_; });
    }
    if (j == masks_.size()) return false;
    for (std::size_t m = 0; m < cover_.size(); ++m)
      if (cover_[m] < d_ && (!suffix_any_[j][m] || cover_[m] + left < d_)) return false;
    const std::size_t max_take = distinct_ ? std::min<std::size_t>(1, left) : left;
    for (std::size_t take = max_take + 1; take-- > 0;) {
      for (std::size_t m = 0; m < cover_.size(); ++m) cover_[m] += take * masks_[j][m];
      for (std::size_t t = 0; t < take; ++t) picked_.push_back(j);
      const bool ok = dfs(j + 1, left - take);
      for (std::size_t m = 0; m < cover_.size(); ++m) cover_[m] -= take * masks_[j][m];
      if (ok) return true;
      for (std::size_t t = 0; t < take; ++t) picked_.pop_back();
    }
    return false;
  }

  const std::vector<std::vector<std::uint8_t>>& masks_;
  std::size_t r_, d_;
  bool distinct_;
  std::vector<std::size_t> cover_;
  std::vector<std::vector<std::uint8_t>> suffix_any_;
  std::vector<std::size_t> picked_;
};

struct RandomTrial {
  std::vector<RowDef> rows;
  std::vector<std::size_t> chosen;
  std::size_t adds = 0;
  bool found = false;
};

RandomTrial random_trial(const FieldSpec& f, const CodeParams& p, std::size_t r_max,
                         const std::vector<Vector>& msgs, Rng& rng) {
  RandomTrial t;
  for (std::size_t x = 0; x < p.k; ++x) {
    Vector e(p.k, 0);
    e[x] = 1;
    t.rows.push_back({RowDef::Input, e, x});
  }
  std::set<Vector> seen;
  for (const auto& r : t.rows) seen.insert(normalized(f, r.v));
  std::size_t attempts = 0;
  while (t.rows.size() < r_max && attempts++ < 64 * r_max) {
    if (uniform_index(rng, 4) == 0) {
      t.rows.push_back({RowDef::Repeat, {}, uniform_index(rng, t.rows.size())});
      t.rows.back().v = t.rows[t.rows.back().a].v;
      continue;
    }
    const auto a = uniform_index(rng, t.rows.size());
    const auto b = uniform_index(rng, t.rows.size());
    if (a == b) continue;
    const std::int64_t s = f.q() == 2 || uniform_index(rng, 2) == 0 ? 1 : -1;
    Vector v(p.k);
    for (std::size_t j = 0; j < p.k; ++j) v[j] = f.add(t.rows[a].v[j], f.mul(f.reduce(s), t.rows[b].v[j]));
    auto norm = normalized(f, v);
    if (std::all_of(v.begin(), v.end(), [](Scalar c) { return c == 0; }) || !seen.insert(norm).second) continue;
    t.rows.push_back({RowDef::Sum, v, a, b, s, 1});
  }
  if (t.rows.size() < p.r) return t;

  std::vector<std::vector<std::uint8_t>> masks;
  for (const auto& r : t.rows) masks.push_back(support_mask(f, r.v, msgs));
  // Scan r-subsets of the grown rows (repeats make them multisets).
  std::vector<bool> pick(t.rows.size(), false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(p.r), pick.end(), true);
  std::vector<std::size_t> cover(msgs.size());
  do {
    std::fill(cover.begin(), cover.end(), 0);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < pick.size(); ++i)
      if (pick[i]) {
        chosen.push_back(i);
        for (std::size_t m = 0; m < msgs.size(); ++m) cover[m] += masks[i][m];
      }
    if (!std::all_of(cover.begin(), cover.end(), [&](std::size_t c) { return c >= p.d; })) continue;
    const auto adds = closure_adds(t.rows, chosen);
    if (!t.found || adds < t.adds) {
      t.found = true;
      t.adds = adds;
      t.chosen = chosen;
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  return t;
}

}  // namespace

SslpWitness sslp_random_search(const CodeParams& p, const SearchConfig& cfg) {
  const FieldSpec f(p.q);
  check_params_shape(p, f);
  const auto r_max = cfg.r_max == 0 ? p.r + p.k : cfg.r_max;
  if (r_max < p.r) throw Error(ErrorKind::InvalidArgument, "r_max below r");
  const auto msgs = projective_messages(f, p.k);
  const auto trials = std::max<std::size_t>(cfg.trials, 1);
  const auto workers = std::max<std::size_t>(cfg.workers, 1);

  struct Best {
    RandomTrial t;
    std::size_t trial = 0;
  };
  std::vector<std::optional<Best>> best(workers);
  parallel_chunks(trials, workers, [&](std::size_t w, std::uint64_t begin, std::uint64_t end) {
    for (auto i = begin; i < end; ++i) {
      auto rng = derive_rng(cfg.seed, kTagSslp, i);
      auto t = random_trial(f, p, r_max, msgs, rng);
      if (!t.found) continue;
      if (!best[w] || t.adds < best[w]->t.adds) best[w] = Best{std::move(t), static_cast<std::size_t>(i)};
    }
  });
  std::optional<Best> out;
  for (auto& b : best)
    if (b && (!out || std::pair(b->t.adds, b->trial) < std::pair(out->t.adds, out->trial))) out = std::move(b);
  if (!out) throw Error(ErrorKind::NotFound, "no " + p.to_string() + " generator found in " + std::to_string(trials) + " trials");
  auto w = make_witness(f, p.k, out->t.rows, out->t.chosen);
  w.trial = out->trial;
  return w;
}

namespace {

using State = std::vector<std::uint32_t>;  // sorted row codes (base-q digits)

std::uint32_t encode(const FieldSpec& f, const Vector& v) {
  std::uint32_t code = 0;
  for (std::size_t j = v.size(); j-- > 0;) code = code * f.q() + v[j];
  return code;
}

Vector decode(const FieldSpec& f, std::uint32_t code, std::size_t k) {
  Vector v(k);
  for (auto& d : v) {
    d = code % f.q();
    code /= f.q();
  }
  return v;
}

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::uint64_t h = 0x84222325cbf29ce4ull;
    for (auto x : s) h = splitmix64(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

// Orders the rows of a reachable state so that each is +-(earlier +- earlier).
std::vector<RowDef> derivation(const FieldSpec& f, const State& state, std::size_t k) {
  std::vector<RowDef> rows;
  std::vector<bool> placed(state.size(), false);
  for (std::size_t x = 0; x < k; ++x) {
    Vector e(k, 0);
    e[x] = 1;
    const auto code = encode(f, e);
    placed[static_cast<std::size_t>(std::lower_bound(state.begin(), state.end(), code) - state.begin())] = true;
    rows.push_back({RowDef::Input, e, x});
  }
  const std::vector<std::int64_t> signs = f.q() == 2 ? std::vector<std::int64_t>{1} : std::vector<std::int64_t>{1, -1};
  while (rows.size() < state.size()) {
    bool progress = false;
    for (std::size_t i = 0; i < state.size() && !progress; ++i) {
      if (placed[i]) continue;
      for (std::size_t a = 0; a < rows.size() && !progress; ++a)
        for (std::size_t b = a + 1; b < rows.size() && !progress; ++b)
          for (auto s : signs) {
            Vector v(k);
            for (std::size_t j = 0; j < k; ++j) v[j] = f.add(rows[a].v[j], f.mul(f.reduce(s), rows[b].v[j]));
            std::int64_t lambda = 1;
            const auto norm = normalized(f, v, &lambda);
            if (encode(f, norm) != state[i]) continue;
            rows.push_back({RowDef::Sum, norm, a, b, s, lambda});
            placed[i] = progress = true;
            break;
          }
    }
    if (!progress) throw Error(ErrorKind::InvalidArgument, "state is not reachable");
  }
  return rows;
}

}  // namespace

SslpExhaustiveResult sslp_exhaustive(const CodeParams& p, const SearchConfig& cfg) {
  const FieldSpec f(p.q);
  check_params_shape(p, f);
  if (p.q > 3) throw Error(ErrorKind::InvalidArgument, "exhaustive SSLP search supports q = 2 or 3");
  const auto msgs = projective_messages(f, p.k);
  const std::vector<std::int64_t> signs = f.q() == 2 ? std::vector<std::int64_t>{1} : std::vector<std::int64_t>{1, -1};

  std::vector<std::vector<std::uint8_t>> code_masks;  // by row code
  std::uint32_t total_codes = 1;
  for (std::size_t i = 0; i < p.k; ++i) total_codes *= f.q();
  code_masks.resize(total_codes);
  for (std::uint32_t c = 1; c < total_codes; ++c) code_masks[c] = support_mask(f, decode(f, c, p.k), msgs);

  State start;
  for (std::size_t x = 0; x < p.k; ++x) {
    Vector e(p.k, 0);
    e[x] = 1;
    start.push_back(encode(f, e));
  }
  std::sort(start.begin(), start.end());

  SslpExhaustiveResult result;
  std::vector<State> level{start};
  for (std::size_t adds = 0;; ++adds) {
    result.programs += level.size();
    if (result.programs > cfg.state_cap)
      throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(cfg.state_cap) + " canonical programs");
    // Earliest state (in sorted order) with a valid selection.
    std::vector<std::optional<std::pair<std::size_t, std::vector<std::size_t>>>> found(std::max<std::size_t>(cfg.workers, 1));
    if (level.front().size() * (cfg.distinct_columns ? 1 : p.r) >= p.r) {
      parallel_chunks(level.size(), cfg.workers, [&](std::size_t w, std::uint64_t begin, std::uint64_t end) {
        for (auto i = begin; i < end; ++i) {
          const auto& st = level[i];
          if (cfg.distinct_columns && st.size() < p.r) return;
          std::vector<std::vector<std::uint8_t>> masks;
          for (auto c : st) masks.push_back(code_masks[c]);
          if (auto pick = CoverSearch(masks, p.r, p.d, cfg.distinct_columns).run()) {
            found[w] = std::pair(static_cast<std::size_t>(i), *pick);
            return;
          }
        }
      });
    }
    for (auto& fw : found) {
      if (!fw) continue;
      const auto& [idx, pick] = *fw;
      const auto& state = level[idx];
      auto rows = derivation(f, state, p.k);
      std::vector<std::size_t> chosen;
      for (auto j : pick) {
        const auto code = state[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (encode(f, rows[i].v) == code) {
            chosen.push_back(i);
            break;
          }
      }
      result.witness = make_witness(f, p.k, rows, chosen);
      return result;
    }
    if (adds == cfg.max_adds) return result;

    std::unordered_set<State, StateHash> next;
    for (const auto& st : level) {
      std::vector<Vector> vecs;
      for (auto c : st) vecs.push_back(decode(f, c, p.k));
      for (std::size_t a = 0; a < st.size(); ++a)
        for (std::size_t b = a + 1; b < st.size(); ++b)
          for (auto s : signs) {
            Vector v(p.k);
            for (std::size_t j = 0; j < p.k; ++j) v[j] = f.add(vecs[a][j], f.mul(f.reduce(s), vecs[b][j]));
            const auto code = encode(f, normalized(f, v));
            if (code == 0 || std::binary_search(st.begin(), st.end(), code)) continue;
            State grown = st;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), code), code);
            next.insert(std::move(grown));
            if (next.size() + result.programs > cfg.state_cap)
              throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(cfg.state_cap) + " canonical programs");
          }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    if (level.empty()) return result;
  }
}

}  // namespace fsmul

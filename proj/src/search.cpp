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

#include "fsmul/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "fsmul/parallel.hpp"
#include "fsmul/random.hpp"

namespace fsmul {
namespace {

// Stream tags keep the per-trial generators of different methods apart.
constexpr std::uint64_t kTagCse = 1, kTagKernel = 2, kTagTransposeCse = 3, kTagTransposeKernel = 4;

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;  // (variable, coefficient), sorted

// Linear program over variable indices: 0..n_inputs-1 are inputs and node i
// defines variable n_inputs+i.
struct LinProg {
  std::size_t n_inputs = 0;
  std::vector<SparseRow> nodes;
  std::vector<std::size_t> outputs;

  std::size_t num_vars() const { return n_inputs + nodes.size(); }
};

SparseRow sparse_row(std::span<const Scalar> row) {
  SparseRow out;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) out.emplace_back(j, row[j]);
  return out;
}

std::size_t count_ops(const LinProg& p, const FieldSpec& f) {
  std::size_t ops = 0;
  for (const auto& node : p.nodes) {
    if (node.empty()) continue;
    ops += node.size() - 1;
    std::set<std::int64_t> classes;
    for (const auto& [v, c] : node) {
      const auto s = f.symmetric(c);
      const auto mag = s < 0 ? -s : s;
      if (mag != 1) classes.insert(mag);
    }
    ops += classes.size();
  }
  return ops;
}

// Statements emitted by to_slp: every node plus one copy per output that is
// an input or repeats an earlier output.
std::size_t count_statements(const LinProg& p) {
  std::vector<bool> claimed(p.num_vars(), false);
  std::size_t copies = 0;
  for (auto v : p.outputs) {
    if (v < p.n_inputs || claimed[v])
      ++copies;
    else
      claimed[v] = true;
  }
  return p.nodes.size() + copies;
}

SlpProgram to_slp(const LinProg& p, const FieldSpec& f, const SlpNames& names) {
  std::vector<std::string> var_name(p.num_vars());
  std::vector<std::string> inputs;
  for (std::size_t i = 0; i < p.n_inputs; ++i) {
    var_name[i] = names.input_prefix + std::to_string(i);
    inputs.push_back(var_name[i]);
  }
  std::vector<std::string> outputs;
  std::vector<std::pair<std::string, std::size_t>> copies;
  for (std::size_t o = 0; o < p.outputs.size(); ++o) {
    const auto v = p.outputs[o];
    auto name = names.output_prefix + std::to_string(o);
    if (v >= p.n_inputs && var_name[v].empty())
      var_name[v] = name;
    else
      copies.emplace_back(name, v);
    outputs.push_back(std::move(name));
  }
  std::size_t temp = 0;
  for (std::size_t v = p.n_inputs; v < p.num_vars(); ++v)
    if (var_name[v].empty()) var_name[v] = names.temp_prefix + std::to_string(temp++);

  std::vector<Statement> stmts;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    LinearStmt s{var_name[p.n_inputs + i], {}};
    for (const auto& [v, c] : p.nodes[i]) s.terms.push_back({f.symmetric(c), var_name[v]});
    stmts.emplace_back(std::move(s));
  }
  for (const auto& [name, v] : copies) stmts.emplace_back(LinearStmt{name, {{1, var_name[v]}}});
  return eliminate_dead(SlpProgram(std::move(inputs), std::move(stmts), std::move(outputs)));
}

std::uint64_t pair_key(std::size_t a, std::size_t b, Scalar lambda) {
  return ((static_cast<std::uint64_t>(a) << 21 | b) << 17) | lambda;
}

// One randomized run of greedy pair elimination over `rows` (variables 0..n-1).
LinProg cse_run(const FieldSpec& f, std::size_t n, std::vector<SparseRow> rows, Rng& rng) {
  LinProg prog;
  prog.n_inputs = n;
  std::size_t next_var = n;
  std::unordered_map<std::uint64_t, std::uint32_t> counts;
  std::vector<std::uint64_t> best_keys;
  while (true) {
    counts.clear();
    for (const auto& row : rows)
      for (std::size_t x = 0; x < row.size(); ++x)
        for (std::size_t y = x + 1; y < row.size(); ++y)
          ++counts[pair_key(row[x].first, row[y].first, f.div(row[y].second, row[x].second))];
    std::uint32_t best = 1;
    best_keys.clear();
    for (const auto& [key, c] : counts) {
      if (c > best) {
        best = c;
        best_keys.assign(1, key);
      } else if (c == best && best >= 2) {
        best_keys.push_back(key);
      }
    }
    if (best < 2) break;
    std::sort(best_keys.begin(), best_keys.end());
    const auto key = best_keys[uniform_index(rng, best_keys.size())];
    const auto lambda = static_cast<Scalar>(key & ((1u << 17) - 1));
    const auto b = static_cast<std::size_t>((key >> 17) & ((1u << 21) - 1));
    const auto a = static_cast<std::size_t>(key >> 38);
    const auto t = next_var++;
    prog.nodes.push_back({{a, 1}, {b, lambda}});
    for (auto& row : rows) {
      auto ia = std::find_if(row.begin(), row.end(), [&](const auto& e) { return e.first == a; });
      auto ib = std::find_if(row.begin(), row.end(), [&](const auto& e) { return e.first == b; });
      if (ia == row.end() || ib == row.end() || ib->second != f.mul(lambda, ia->second)) continue;
      const auto ca = ia->second;
      row.erase(ib);  // ib > ia, erase it first so ia stays valid
      row.erase(ia);
      row.emplace_back(t, ca);
    }
  }
  for (auto& row : rows) {
    if (row.size() == 1 && row[0].second == 1) {
      prog.outputs.push_back(row[0].first);
    } else {
      prog.nodes.push_back(std::move(row));
      prog.outputs.push_back(next_var++);
    }
  }
  return prog;
}

std::vector<SparseRow> sparse_rows(const Matrix& m, std::span<const std::size_t> idx) {
  std::vector<SparseRow> out;
  for (auto i : idx) out.push_back(sparse_row(m.row(i)));
  return out;
}

LinProg cse_trial(const Matrix& m, Rng& rng) {
  std::vector<std::size_t> all(m.rows());
  std::iota(all.begin(), all.end(), 0);
  return cse_run(m.field(), m.cols(), sparse_rows(m, all), rng);
}

// Incremental independence test against a growing echelon basis.
class Basis {
 public:
  explicit Basis(const FieldSpec& f) : f_(f) {}
  std::size_t size() const { return vecs_.size(); }
  bool try_add(std::span<const Scalar> row) {
    Vector v(row.begin(), row.end());
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
      const auto c = v[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f_.sub(v[j], f_.mul(c, vecs_[i][j]));
    }
    auto it = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
    if (it == v.end()) return false;
    const auto inv = f_.inv(*it);
    for (auto& x : v) x = f_.mul(x, inv);
    pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
    vecs_.push_back(std::move(v));
    return true;
  }

 private:
  FieldSpec f_;
  std::vector<Vector> vecs_;
  std::vector<std::size_t> pivots_;
};

LinProg kernel_trial(const Matrix& m, std::size_t rank_m, Rng& rng) {
  const auto& f = m.field();
  const auto rows = m.rows(), n = m.cols();
  const auto k = uniform_index(rng, rank_m + 1);

  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Basis basis(f);
  std::vector<std::size_t> g;
  std::vector<bool> in_g(rows, false);
  for (auto i : order) {
    if (g.size() == k) break;
    if (basis.try_add(m.row(i))) {
      g.push_back(i);
      in_g[i] = true;
    }
  }
  std::vector<std::size_t> coords(n);
  std::iota(coords.begin(), coords.end(), 0);
  std::shuffle(coords.begin(), coords.end(), rng);
  std::vector<std::size_t> h;
  for (auto c : coords) {
    if (basis.size() == n) break;
    Vector e(n, 0);
    e[c] = 1;
    if (basis.try_add(e)) h.push_back(c);
  }

  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < rows; ++i)
    if (!in_g[i]) rest.push_back(i);
  std::shuffle(rest.begin(), rest.end(), rng);
  const auto j = uniform_index(rng, rest.size() + 1);
  const std::vector<std::size_t> s(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(j));
  const std::vector<std::size_t> r(rest.begin() + static_cast<std::ptrdiff_t>(j), rest.end());

  auto first_rows = sparse_rows(m, g);
  const auto r_rows = sparse_rows(m, r);
  first_rows.insert(first_rows.end(), r_rows.begin(), r_rows.end());
  LinProg p1 = cse_run(f, n, std::move(first_rows), rng);

  LinProg out = p1;
  std::vector<std::size_t> s_vars;
  if (!s.empty()) {
    Matrix gh(f, n, n);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t c = 0; c < n; ++c) gh.set(a, c, m(g[a], c));
    for (std::size_t a = 0; a < h.size(); ++a) gh.set(g.size() + a, h[a], 1);
    const auto x = solve_right(gh, select_rows(m, s));
    std::vector<SparseRow> x_rows;
    for (std::size_t a = 0; a < x.rows(); ++a) x_rows.push_back(sparse_row(x.row(a)));
    const LinProg p2 = cse_run(f, n, std::move(x_rows), rng);

    const auto base = out.num_vars();
    auto remap = [&](std::size_t v) {
      if (v < g.size()) return p1.outputs[v];
      if (v < n) return h[v - g.size()];
      return base + (v - n);
    };
    for (const auto& node : p2.nodes) {
      SparseRow mapped;
      for (const auto& [v, c] : node) mapped.emplace_back(remap(v), c);
      std::sort(mapped.begin(), mapped.end());
      out.nodes.push_back(std::move(mapped));
    }
    for (auto v : p2.outputs) s_vars.push_back(remap(v));
  }

  out.outputs.assign(rows, 0);
  for (std::size_t a = 0; a < g.size(); ++a) out.outputs[g[a]] = p1.outputs[a];
  for (std::size_t a = 0; a < r.size(); ++a) out.outputs[r[a]] = p1.outputs[g.size() + a];
  for (std::size_t a = 0; a < s.size(); ++a) out.outputs[s[a]] = s_vars[a];
  return out;
}

struct Candidate {
  LinProg prog;
  std::size_t ops = 0;
  std::size_t statements = 0;
  std::size_t trial = 0;
  bool valid = false;

  auto key() const { return std::tuple(ops, statements, trial); }
};

// Runs fn(trial, rng) for every trial and keeps the best program under the
// (ops, statements, trial) order, so the result ignores the partitioning.
template <typename Fn>
Candidate run_trials(const FieldSpec& f, const SearchConfig& cfg, std::uint64_t tag, Fn fn) {
  const auto trials = std::max<std::size_t>(cfg.trials, 1);
  const auto workers = std::max<std::size_t>(cfg.workers, 1);
  std::vector<Candidate> best(workers);
  parallel_chunks(trials, workers, [&](std::size_t w, std::uint64_t begin, std::uint64_t end) {
    for (auto t = begin; t < end; ++t) {
      auto rng = derive_rng(cfg.seed, tag, t);
      Candidate c;
      c.prog = fn(rng);
      c.ops = count_ops(c.prog, f);
      c.statements = count_statements(c.prog);
      c.trial = static_cast<std::size_t>(t);
      c.valid = true;
      if (!best[w].valid || c.key() < best[w].key()) best[w] = std::move(c);
    }
  });
  Candidate out;
  for (auto& c : best)
    if (c.valid && (!out.valid || c.key() < out.key())) out = std::move(c);
  return out;
}

OptResult finish(const Candidate& c, const Matrix& m, const SlpNames& names, const char* method) {
  OptResult res{to_slp(c.prog, m.field(), names), {}, method, c.trial};
  res.cost = cost(res.program, m.field());
  if (!(linear_matrix(res.program, m.field()) == m))
    throw Error(ErrorKind::InvalidArgument, std::string(method) + " produced a program for the wrong matrix");
  return res;
}

bool better(const OptResult& a, const OptResult& b) {
  return std::pair(a.cost.linear_ops(), a.program.statements().size()) <
         std::pair(b.cost.linear_ops(), b.program.statements().size());
}

}  // namespace

OptResult cse_optimize(const Matrix& m, const SearchConfig& cfg, const SlpNames& names) {
  auto c = run_trials(m.field(), cfg, kTagCse, [&](Rng& rng) { return cse_trial(m, rng); });
  return finish(c, m, names, "cse");
}

OptResult kernel_decompose(const Matrix& m, const SearchConfig& cfg, const SlpNames& names) {
  const auto r = rank(m);
  auto c = run_trials(m.field(), cfg, kTagKernel, [&](Rng& rng) { return kernel_trial(m, r, rng); });
  return finish(c, m, names, "kernel");
}

OptResult best_slp(const Matrix& m, const SearchConfig& cfg, const SlpNames& names, bool use_transpose) {
  OptResult best = cse_optimize(m, cfg, names);
  if (auto k = kernel_decompose(m, cfg, names); better(k, best)) best = std::move(k);
  if (!use_transpose || m.rows() == 0 || m.cols() == 0) return best;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row_weight(i) == 0) return best;
  const auto mt = transpose(m);
  for (std::size_t j = 0; j < mt.rows(); ++j)
    if (mt.row_weight(j) == 0) return best;

  const auto r = rank(mt);
  auto c = run_trials(m.field(), cfg, kTagTransposeCse, [&](Rng& rng) { return cse_trial(mt, rng); });
  const auto ck = run_trials(m.field(), cfg, kTagTransposeKernel, [&](Rng& rng) { return kernel_trial(mt, r, rng); });
  if (ck.key() < c.key()) c = ck;
  // The dual program's additions shift by rows - cols of the original map.
  OptResult t{transpose_slp(to_slp(c.prog, m.field(), {}), names), {}, "transpose", c.trial};
  t.cost = cost(t.program, m.field());
  if (!(linear_matrix(t.program, m.field()) == m))
    throw Error(ErrorKind::InvalidArgument, "transposed program computes the wrong matrix");
  if (better(t, best)) best = std::move(t);
  return best;
}

bool verify_linear_program(const SlpProgram& prog, const Matrix& m, std::uint64_t seed) {
  const auto& f = m.field();
  if (!prog.is_linear() || prog.inputs().size() != m.cols() || prog.outputs().size() != m.rows()) return false;
  if (!(linear_matrix(prog, f) == m)) return false;
  const SlpEvaluator run(prog, f);
  const auto n = m.cols();
  std::uint64_t total = 1;
  bool exhaustive = n <= 10;
  for (std::size_t i = 0; i < n && exhaustive; ++i) {
    total *= f.q();
    if (total > (std::uint64_t{1} << 24)) exhaustive = false;
  }
  Rng rng(seed);
  const std::uint64_t count = exhaustive ? total : 10000;
  Vector x(n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (exhaustive) {
      auto v = idx;
      for (auto& d : x) {
        d = static_cast<Scalar>(v % f.q());
        v /= f.q();
      }
    } else {
      x = random_vector(rng, f, n);
    }
    if (run(x) != matvec(m, x)) return false;
  }
  return true;
}

std::vector<Polynomial> irreducibles(const FieldSpec& field, int degree) {
  return monic_irreducibles(field, degree);
}

std::vector<SweepRow> sweep_moduli(const LrpAlgorithm& alg, const SearchConfig& cfg,
                                   const VerifyOptions& verify_options) {
  const auto n = alg.n_left();
  if (n < 2 || alg.n_right() != n || alg.n_out() != 2 * n - 1)
    throw Error(ErrorKind::NotPolyMul, "sweep needs an algorithm with polynomial-product shape");
  std::vector<SweepRow> rows;
  for (auto& modulus : irreducibles(alg.field(), static_cast<int>(n))) {
    const auto folded = fold(alg.P(), modulus);
    const LrpAlgorithm lrp(alg.L(), alg.R(), folded);
    auto report = verify(lrp, oracle_from_modulus(alg.field(), modulus), verify_options);
    auto best = best_slp(folded, cfg, SlpNames{"p", "c", "t"});
    rows.push_back({std::move(modulus), std::move(best), std::move(report)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.best.cost.linear_ops() < b.best.cost.linear_ops();
  });
  return rows;
}

}  // namespace fsmul

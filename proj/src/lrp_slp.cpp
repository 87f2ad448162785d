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

#include <unordered_map>
#include <unordered_set>

#include "fsmul/bilinear.hpp"

namespace fsmul {
namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Appends one stage to `out`, mapping its inputs to `in_names` and its outputs
// to `out_names`.  Temporaries keep their names unless taken.
void splice_stage(const SlpProgram& stage, const std::vector<std::string>& in_names,
                  const std::vector<std::string>& out_names, const std::string& tag,
                  std::unordered_set<std::string>& taken, std::vector<Statement>& out) {
  std::unordered_map<std::string, std::string> map;
  std::unordered_set<std::string> inputs(stage.inputs().begin(), stage.inputs().end());
  for (std::size_t k = 0; k < stage.inputs().size(); ++k) map[stage.inputs()[k]] = in_names[k];

  std::vector<std::pair<std::string, std::string>> copies;  // canonical := source
  for (std::size_t i = 0; i < stage.outputs().size(); ++i) {
    const auto& name = stage.outputs()[i];
    if (!inputs.count(name) && !map.count(name))
      map[name] = out_names[i];
    else
      copies.emplace_back(out_names[i], name);
  }
  for (const auto& s : stage.statements()) {
    const auto& dst = target(s);
    if (map.count(dst)) continue;
    std::string fresh = dst;
    for (std::size_t k = 0; taken.count(fresh); ++k) fresh = dst + "_" + tag + (k ? std::to_string(k) : "");
    map[dst] = fresh;
    taken.insert(fresh);
  }

  auto m = [&](const std::string& n) { return map.at(n); };
  for (const auto& s : stage.statements()) {
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      LinearStmt t{m(lin->dst), {}};
      for (const auto& term : lin->terms) t.terms.push_back({term.coeff, m(term.src)});
      out.emplace_back(std::move(t));
    } else {
      const auto& p = std::get<ProductStmt>(s);
      out.emplace_back(ProductStmt{m(p.dst), m(p.left), m(p.right)});
    }
  }
  for (const auto& [dst, src] : copies) out.emplace_back(LinearStmt{dst, {{1, m(src)}}});
}

void check_stage(const SlpProgram& stage, const Matrix& expected, const char* name) {
  if (!stage.is_linear()) throw Error(ErrorKind::StageMismatch, std::string(name) + " stage is not linear");
  if (!(linear_matrix(stage, expected.field()) == expected))
    throw Error(ErrorKind::StageMismatch, std::string(name) + " stage does not compute the " + name + " matrix");
}

// Dependency class of each value: bit 0 left operand, bit 1 right operand,
// bit 2 product of the two.
enum : unsigned { kLeft = 1, kRight = 2, kBilinear = 4 };

std::unordered_map<std::string, unsigned> classify(const SlpProgram& prog, std::size_t n_left) {
  std::unordered_map<std::string, unsigned> kind;
  for (std::size_t k = 0; k < prog.inputs().size(); ++k) kind[prog.inputs()[k]] = k < n_left ? kLeft : kRight;
  for (const auto& s : prog.statements()) {
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      unsigned acc = 0;
      for (const auto& t : lin->terms) acc |= kind.at(t.src);
      if ((acc & kBilinear) && (acc & (kLeft | kRight)))
        throw Error(ErrorKind::NonBilinearProduct, "'" + lin->dst + "' mixes products with linear operand terms");
      kind[lin->dst] = acc;
    } else {
      const auto& p = std::get<ProductStmt>(s);
      const auto kl = kind.at(p.left), kr = kind.at(p.right);
      const bool ok = (kl | kr) == (kLeft | kRight) && kl != (kLeft | kRight) && kr != (kLeft | kRight);
      if (!ok) throw Error(ErrorKind::NonBilinearProduct, "'" + p.dst + "' is not a left-by-right product");
      kind[p.dst] = kBilinear;
    }
  }
  return kind;
}

}  // namespace

SlpProgram lrp_to_slp(const LrpAlgorithm& alg, const SlpProgram& l_prog, const SlpProgram& r_prog,
                      const SlpProgram& p_prog) {
  check_stage(l_prog, alg.L(), "L");
  check_stage(r_prog, alg.R(), "R");
  check_stage(p_prog, alg.P(), "P");

  const auto a = numbered("a", alg.n_left()), b = numbered("b", alg.n_right());
  const auto l = numbered("l", alg.rank()), r = numbered("r", alg.rank()), p = numbered("p", alg.rank());
  const auto c = numbered("c", alg.n_out());
  std::unordered_set<std::string> taken;
  for (const auto* names : {&a, &b, &l, &r, &p, &c}) taken.insert(names->begin(), names->end());

  std::vector<Statement> stmts;
  splice_stage(l_prog, a, l, "l", taken, stmts);
  splice_stage(r_prog, b, r, "r", taken, stmts);
  for (std::size_t i = 0; i < alg.rank(); ++i) stmts.emplace_back(ProductStmt{p[i], l[i], r[i]});
  splice_stage(p_prog, p, c, "p", taken, stmts);

  auto inputs = a;
  inputs.insert(inputs.end(), b.begin(), b.end());
  return SlpProgram(std::move(inputs), std::move(stmts), c);
}

StagePrograms split_stages(const SlpProgram& prog, std::size_t n_left) {
  if (n_left > prog.inputs().size()) throw Error(ErrorKind::InvalidArgument, "n_left exceeds the input count");
  const auto kind = classify(prog, n_left);
  std::vector<std::string> a(prog.inputs().begin(), prog.inputs().begin() + n_left);
  std::vector<std::string> b(prog.inputs().begin() + n_left, prog.inputs().end());
  std::vector<Statement> ls, rs, ps;
  std::vector<std::string> lo, ro, po;
  for (const auto& s : prog.statements()) {
    if (const auto* p = std::get_if<ProductStmt>(&s)) {
      const bool swap = kind.at(p->left) & kRight;
      lo.push_back(swap ? p->right : p->left);
      ro.push_back(swap ? p->left : p->right);
      po.push_back(p->dst);
      continue;
    }
    const auto k = kind.at(target(s));
    if (k == kLeft)
      ls.push_back(s);
    else if (k == kRight)
      rs.push_back(s);
    else
      ps.push_back(s);
  }
  for (const auto& o : prog.outputs())
    if (kind.at(o) & (kLeft | kRight))
      throw Error(ErrorKind::NonBilinearProduct, "output '" + o + "' is linear in an operand");
  // Drops statements a stage does not need (the program may interleave them).
  auto stage = [](std::vector<std::string> in, std::vector<Statement> st, std::vector<std::string> out) {
    return eliminate_dead(SlpProgram(std::move(in), std::move(st), std::move(out)));
  };
  return {stage(a, ls, lo), stage(b, rs, ro), stage(po, ps, prog.outputs())};
}

LrpAlgorithm lrp_from_slp(const SlpProgram& prog, const FieldSpec& f, std::size_t n_left) {
  const auto st = split_stages(prog, n_left);
  return LrpAlgorithm(linear_matrix(st.l, f), linear_matrix(st.r, f), linear_matrix(st.p, f));
}

bool validate_lrp_slp(const SlpProgram& prog, const LrpAlgorithm& alg, const VerifyOptions& options) {
  const auto nl = alg.n_left(), nr = alg.n_right();
  if (prog.inputs().size() != nl + nr || prog.outputs().size() != alg.n_out())
    throw Error(ErrorKind::StageMismatch, "program has " + std::to_string(prog.inputs().size()) + " inputs and " +
                                              std::to_string(prog.outputs().size()) + " outputs");
  classify(prog, nl);
  const SlpEvaluator run(prog, alg.field());
  auto candidate = [&](std::span<const Scalar> x, std::span<const Scalar> y) {
    Vector in(x.begin(), x.end());
    in.insert(in.end(), y.begin(), y.end());
    return run(in);
  };
  return verify_fn(candidate, BilinearOracle::from_lrp(alg), options).passed();
}

}  // namespace fsmul

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
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fsmul/slp.hpp"

namespace fsmul {

bool operator==(const LinearStmt& a, const LinearStmt& b) {
  if (a.dst != b.dst || a.terms.size() != b.terms.size()) return false;
  auto key = [](const Term& t) { return std::pair(t.src, t.coeff); };
  std::vector<std::pair<std::string, std::int64_t>> x, y;
  for (const auto& t : a.terms) x.push_back(key(t));
  for (const auto& t : b.terms) y.push_back(key(t));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

const std::string& target(const Statement& s) {
  return std::visit([](const auto& st) -> const std::string& { return st.dst; }, s);
}

SlpProgram::SlpProgram(std::vector<std::string> inputs, std::vector<Statement> statements,
                       std::vector<std::string> outputs)
    : inputs_(std::move(inputs)), statements_(std::move(statements)), outputs_(std::move(outputs)) {
  std::unordered_set<std::string> defined;
  for (const auto& in : inputs_)
    if (!defined.insert(in).second)
      throw Error(ErrorKind::ReassignedVariable, "input '" + in + "' listed twice");
  auto need = [&](const std::string& name, const std::string& where) {
    if (!defined.count(name))
      throw Error(ErrorKind::UseBeforeDefine, "'" + name + "' used before definition in " + where);
  };
  for (const auto& s : statements_) {
    const auto& dst = target(s);
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      for (const auto& t : lin->terms) need(t.src, dst);
    } else {
      const auto& p = std::get<ProductStmt>(s);
      need(p.left, dst);
      need(p.right, dst);
    }
    if (!defined.insert(dst).second)
      throw Error(ErrorKind::ReassignedVariable, "'" + dst + "' assigned twice");
  }
  for (const auto& o : outputs_) need(o, "output list");
}

bool SlpProgram::is_linear() const { return product_count() == 0; }

std::size_t SlpProgram::product_count() const {
  return static_cast<std::size_t>(std::count_if(statements_.begin(), statements_.end(), [](const auto& s) {
    return std::holds_alternative<ProductStmt>(s);
  }));
}

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    // Cap the digit run so absurd suffixes cannot overflow.
    const auto digits = s.substr(i);
    const unsigned long long num = digits.empty() || digits.size() > 18 ? 0 : std::stoull(digits);
    return std::tuple(s.substr(0, i), digits.empty() ? 0ull : 1ull, num);
  };
  const auto ka = split(a), kb = split(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

std::map<std::string, Scalar> eval(const SlpProgram& prog, const FieldSpec& field,
                                   const std::map<std::string, Scalar>& assignment) {
  std::unordered_map<std::string, Scalar> vals;
  for (const auto& in : prog.inputs()) {
    auto it = assignment.find(in);
    if (it == assignment.end()) throw Error(ErrorKind::MissingInput, "no value for input '" + in + "'");
    vals[in] = it->second % field.q();
  }
  for (const auto& s : prog.statements()) {
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      Scalar acc = 0;
      for (const auto& t : lin->terms) acc = field.add(acc, field.mul(field.reduce(t.coeff), vals.at(t.src)));
      vals[lin->dst] = acc;
    } else {
      const auto& p = std::get<ProductStmt>(s);
      vals[p.dst] = field.mul(vals.at(p.left), vals.at(p.right));
    }
  }
  std::map<std::string, Scalar> out;
  for (const auto& o : prog.outputs()) out[o] = vals.at(o);
  return out;
}

SlpEvaluator::SlpEvaluator(const SlpProgram& prog, const FieldSpec& field) : field_(field) {
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& in : prog.inputs()) index.emplace(in, index.size());
  num_inputs_ = index.size();
  for (const auto& s : prog.statements()) {
    Op op{};
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      op.product = false;
      for (const auto& t : lin->terms) op.terms.emplace_back(field.reduce(t.coeff), index.at(t.src));
    } else {
      const auto& p = std::get<ProductStmt>(s);
      op.product = true;
      op.left = index.at(p.left);
      op.right = index.at(p.right);
    }
    op.dst = index.size();
    index.emplace(target(s), op.dst);
    ops_.push_back(std::move(op));
  }
  num_vars_ = index.size();
  for (const auto& o : prog.outputs()) outputs_.push_back(index.at(o));
}

Vector SlpEvaluator::operator()(std::span<const Scalar> inputs) const {
  if (inputs.size() != num_inputs_)
    throw Error(ErrorKind::MissingInput, "expected " + std::to_string(num_inputs_) + " input values");
  Vector vals(num_vars_, 0);
  for (std::size_t i = 0; i < num_inputs_; ++i) vals[i] = inputs[i] % field_.q();
  for (const auto& op : ops_) {
    if (op.product) {
      vals[op.dst] = field_.mul(vals[op.left], vals[op.right]);
    } else {
      Scalar acc = 0;
      for (const auto& [c, src] : op.terms) acc = field_.add(acc, field_.mul(c, vals[src]));
      vals[op.dst] = acc;
    }
  }
  Vector out;
  out.reserve(outputs_.size());
  for (auto idx : outputs_) out.push_back(vals[idx]);
  return out;
}

namespace {

void count_linear(const std::vector<std::int64_t>& coeffs, CostReport& rep) {
  std::set<std::int64_t> classes;
  std::size_t nonzero = 0;
  for (auto c : coeffs) {
    if (c == 0) continue;
    ++nonzero;
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) classes.insert(mag);
  }
  if (nonzero > 0) rep.add += nonzero - 1;
  rep.sca += classes.size();
}

template <typename Reduce>
CostReport cost_with(const SlpProgram& prog, Reduce reduce) {
  CostReport rep;
  for (const auto& s : prog.statements()) {
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      std::vector<std::int64_t> coeffs;
      for (const auto& t : lin->terms) coeffs.push_back(reduce(t.coeff));
      count_linear(coeffs, rep);
    } else {
      ++rep.mul;
    }
  }
  return rep;
}

}  // namespace

CostReport cost(const SlpProgram& prog) {
  return cost_with(prog, [](std::int64_t c) { return c; });
}

CostReport cost(const SlpProgram& prog, const FieldSpec& field) {
  return cost_with(prog, [&](std::int64_t c) { return field.symmetric(field.reduce(c)); });
}

Matrix linear_matrix(const SlpProgram& prog, const FieldSpec& field) {
  const auto n = prog.inputs().size();
  std::unordered_map<std::string, Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, 0);
    e[i] = 1;
    rows.emplace(prog.inputs()[i], std::move(e));
  }
  for (const auto& s : prog.statements()) {
    const auto* lin = std::get_if<LinearStmt>(&s);
    if (!lin) throw Error(ErrorKind::NotLinear, "product statement '" + target(s) + "'");
    Vector acc(n, 0);
    for (const auto& t : lin->terms) {
      const auto c = field.reduce(t.coeff);
      const auto& src = rows.at(t.src);
      for (std::size_t j = 0; j < n; ++j) acc[j] = field.add(acc[j], field.mul(c, src[j]));
    }
    rows.emplace(lin->dst, std::move(acc));
  }
  Matrix m(field, prog.outputs().size(), n);
  for (std::size_t i = 0; i < prog.outputs().size(); ++i) {
    const auto& r = rows.at(prog.outputs()[i]);
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, r[j]);
  }
  return m;
}

SlpProgram eliminate_dead(const SlpProgram& prog) {
  std::unordered_set<std::string> live(prog.outputs().begin(), prog.outputs().end());
  std::vector<bool> keep(prog.statements().size(), false);
  for (std::size_t k = prog.statements().size(); k-- > 0;) {
    const auto& s = prog.statements()[k];
    if (!live.count(target(s))) continue;
    keep[k] = true;
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      for (const auto& t : lin->terms) live.insert(t.src);
    } else {
      const auto& p = std::get<ProductStmt>(s);
      live.insert(p.left);
      live.insert(p.right);
    }
  }
  std::vector<Statement> kept;
  for (std::size_t k = 0; k < keep.size(); ++k)
    if (keep[k]) kept.push_back(prog.statements()[k]);
  return SlpProgram(prog.inputs(), std::move(kept), prog.outputs());
}

SlpProgram rename(const SlpProgram& prog, const std::map<std::string, std::string>& mapping) {
  auto ren = [&](const std::string& n) {
    auto it = mapping.find(n);
    return it == mapping.end() ? n : it->second;
  };
  std::vector<std::string> inputs, outputs;
  for (const auto& n : prog.inputs()) inputs.push_back(ren(n));
  for (const auto& n : prog.outputs()) outputs.push_back(ren(n));
  std::vector<Statement> stmts;
  for (const auto& s : prog.statements()) {
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      LinearStmt out{ren(lin->dst), {}};
      for (const auto& t : lin->terms) out.terms.push_back({t.coeff, ren(t.src)});
      stmts.emplace_back(std::move(out));
    } else {
      const auto& p = std::get<ProductStmt>(s);
      stmts.emplace_back(ProductStmt{ren(p.dst), ren(p.left), ren(p.right)});
    }
  }
  return SlpProgram(std::move(inputs), std::move(stmts), std::move(outputs));
}

}  // namespace fsmul

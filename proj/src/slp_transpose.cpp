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

#include "fsmul/slp.hpp"

namespace fsmul {
namespace {

// A reference to a transposed-program variable, possibly negated.
struct Signed {
  std::int64_t sign;
  std::string name;
};

void check_transposable(const SlpProgram& prog) {
  std::unordered_set<std::string> live(prog.outputs().begin(), prog.outputs().end());
  for (auto it = prog.statements().rbegin(); it != prog.statements().rend(); ++it) {
    const auto* lin = std::get_if<LinearStmt>(&*it);
    if (!lin) throw Error(ErrorKind::NotLinear, "product statement '" + target(*it) + "'");
    if (!live.count(lin->dst)) throw Error(ErrorKind::DeadCode, "'" + lin->dst + "' does not reach an output");
    std::size_t nonzero = 0;
    for (const auto& t : lin->terms) {
      if (t.coeff == 0) continue;
      ++nonzero;
      live.insert(t.src);
    }
    if (nonzero == 0) throw Error(ErrorKind::DeadCode, "'" + lin->dst + "' is identically zero");
  }
  for (const auto& in : prog.inputs())
    if (!live.count(in)) throw Error(ErrorKind::DeadCode, "input '" + in + "' is never used");
}

}  // namespace

SlpProgram transpose_slp(const SlpProgram& prog, const SlpNames& names) {
  check_transposable(prog);

  std::vector<std::string> new_inputs, new_outputs;
  for (std::size_t j = 0; j < prog.outputs().size(); ++j)
    new_inputs.push_back(names.input_prefix + std::to_string(j));
  for (std::size_t k = 0; k < prog.inputs().size(); ++k)
    new_outputs.push_back(names.output_prefix + std::to_string(k));

  // Every contribution carries a unit coefficient; non-unit factors are
  // applied once per coefficient class through a scaled temporary.
  std::unordered_map<std::string, std::vector<Signed>> contribs;
  for (std::size_t j = 0; j < prog.outputs().size(); ++j)
    contribs[prog.outputs()[j]].push_back({1, new_inputs[j]});

  std::vector<Statement> out;
  std::size_t temp_counter = 0;
  auto fresh = [&] { return names.temp_prefix + std::to_string(temp_counter++); };
  auto sum_stmt = [](const std::string& dst, const std::vector<Signed>& parts) {
    LinearStmt s{dst, {}};
    for (const auto& p : parts) s.terms.push_back({p.sign, p.name});
    return s;
  };

  for (auto it = prog.statements().rbegin(); it != prog.statements().rend(); ++it) {
    const auto& lin = std::get<LinearStmt>(*it);
    const auto& parts = contribs.at(lin.dst);
    Signed adj = parts.front();
    if (parts.size() > 1) {
      adj = {1, fresh()};
      out.emplace_back(sum_stmt(adj.name, parts));
    }
    std::unordered_map<std::int64_t, std::string> scaled;
    for (const auto& t : lin.terms) {
      if (t.coeff == 0) continue;
      const std::int64_t sign = t.coeff < 0 ? -1 : 1;
      const std::int64_t mag = t.coeff * sign;
      if (mag == 1) {
        contribs[t.src].push_back({sign * adj.sign, adj.name});
        continue;
      }
      auto [slot, inserted] = scaled.try_emplace(mag);
      if (inserted) {
        slot->second = fresh();
        out.emplace_back(LinearStmt{slot->second, {{mag * adj.sign, adj.name}}});
      }
      contribs[t.src].push_back({sign, slot->second});
    }
  }

  for (std::size_t k = 0; k < prog.inputs().size(); ++k)
    out.emplace_back(sum_stmt(new_outputs[k], contribs.at(prog.inputs()[k])));
  return SlpProgram(std::move(new_inputs), std::move(out), std::move(new_outputs));
}

}  // namespace fsmul

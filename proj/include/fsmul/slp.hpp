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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fsmul/ff.hpp"

namespace fsmul {

// Straight-line programs in the listing syntax
//
//   stmt   := ident ":=" expr ";"
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)?
//   factor := ident | integer | "(" expr ")"
//
// A statement is either a linear combination of earlier variables or the
// product of two variables.  Coefficients are kept as the integers written in
// the listing; they are reduced only when a field is supplied.

struct Term {
  std::int64_t coeff;
  std::string src;
  friend bool operator==(const Term&, const Term&) = default;
};

/// dst := sum coeff*src.  An empty term list denotes the constant zero.
struct LinearStmt {
  std::string dst;
  std::vector<Term> terms;
  /// Term order is irrelevant to the value, so equality ignores it.
  friend bool operator==(const LinearStmt& a, const LinearStmt& b);
};

struct ProductStmt {
  std::string dst;
  std::string left;
  std::string right;
  friend bool operator==(const ProductStmt&, const ProductStmt&) = default;
};

using Statement = std::variant<LinearStmt, ProductStmt>;

const std::string& target(const Statement& s);

class SlpProgram {
 public:
  SlpProgram() = default;
  /// Validates single assignment, definition before use, and that every
  /// output is defined.
  SlpProgram(std::vector<std::string> inputs, std::vector<Statement> statements,
             std::vector<std::string> outputs);

  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::vector<Statement>& statements() const noexcept { return statements_; }
  const std::vector<std::string>& outputs() const noexcept { return outputs_; }

  bool is_linear() const;
  std::size_t product_count() const;

  friend bool operator==(const SlpProgram&, const SlpProgram&) = default;

 private:
  std::vector<std::string> inputs_;
  std::vector<Statement> statements_;
  std::vector<std::string> outputs_;
};

struct ParseOptions {
  /// Explicit input order.  When absent, inputs are the identifiers read
  /// before any assignment, in natural order (a2 < a10).
  std::optional<std::vector<std::string>> inputs;
  /// Explicit output order.  When absent, outputs are the assigned names made
  /// of one of `output_prefixes` followed by digits, in natural order.
  std::optional<std::vector<std::string>> outputs;
  std::vector<std::string> output_prefixes{"o", "c"};
};

SlpProgram parse_slp(std::string_view text, const ParseOptions& options = {});
/// One statement per line.  Terms sharing a non-unit coefficient are printed
/// factored, e.g. "c5:=k11-(k4+p9)*2-p12*3;".
std::string print_slp(const SlpProgram& prog);

/// Natural ordering of identifiers: alphabetic prefix, then numeric suffix.
bool natural_less(const std::string& a, const std::string& b);

/// Values of the outputs, keyed by name.  Throws MissingInput.
std::map<std::string, Scalar> eval(const SlpProgram& prog, const FieldSpec& field,
                                   const std::map<std::string, Scalar>& assignment);

/// Positional evaluator compiled once for repeated use.
class SlpEvaluator {
 public:
  SlpEvaluator(const SlpProgram& prog, const FieldSpec& field);
  /// inputs in prog.inputs() order; returns outputs in prog.outputs() order.
  Vector operator()(std::span<const Scalar> inputs) const;

 private:
  struct Op {
    std::size_t dst;
    bool product;
    std::size_t left, right;                         // product operands
    std::vector<std::pair<Scalar, std::size_t>> terms;  // linear terms
  };
  FieldSpec field_;
  std::size_t num_vars_ = 0;
  std::size_t num_inputs_ = 0;
  std::vector<Op> ops_;
  std::vector<std::size_t> outputs_;
};

struct CostReport {
  std::size_t mul = 0;
  std::size_t add = 0;
  std::size_t sca = 0;
  std::size_t linear_ops() const noexcept { return add + sca; }
  friend bool operator==(const CostReport&, const CostReport&) = default;
};

// Cost model: every Product statement is one multiplication; a linear
// statement with t nonzero terms costs t-1 additions plus one scaling per
// distinct coefficient magnitude other than 1 (terms sharing a coefficient up
// to sign are summed first and scaled once).  Negation is free.
//
/// Generic-ring cost: coefficients taken as written.
CostReport cost(const SlpProgram& prog);
/// Cost over F_q: coefficients reduced to symmetric residues, zero terms
/// dropped (over F_3 the coefficient 2 is a free negation).
CostReport cost(const SlpProgram& prog, const FieldSpec& field);

/// Matrix M with outputs == M * inputs.  Throws NotLinear.
Matrix linear_matrix(const SlpProgram& prog, const FieldSpec& field);

/// Name prefixes for generated programs.
struct SlpNames {
  std::string input_prefix = "i";
  std::string output_prefix = "o";
  std::string temp_prefix = "t";
};

/// Program for the transposed linear map (reverse-mode rewrite).  Requires a
/// linear program without dead statements, unused inputs or zero outputs;
/// throws NotLinear or DeadCode otherwise.  add(result) == add(prog) +
/// outputs - inputs and the scaling count is unchanged.
SlpProgram transpose_slp(const SlpProgram& prog, const SlpNames& names = {});

/// Drops statements that do not contribute to any output.
SlpProgram eliminate_dead(const SlpProgram& prog);

/// Applies a name substitution to inputs, statements and outputs.  Names
/// absent from the map are kept.
SlpProgram rename(const SlpProgram& prog, const std::map<std::string, std::string>& mapping);

}  // namespace fsmul

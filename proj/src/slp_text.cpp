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
#include <sstream>
#include <unordered_set>

#include "fsmul/slp.hpp"

namespace fsmul {
namespace {

enum class Tok { Ident, Int, Assign, Plus, Minus, Star, LParen, RParen, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (c == ':' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Assign, ":=", l, cc});
      advance(2);
    } else {
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ';': k = Tok::Semi; break;
        default:
          throw Error(ErrorKind::SyntaxError, "line " + std::to_string(l) + ", column " +
                                                  std::to_string(cc) + ": unexpected character '" +
                                                  std::string(1, c) + "'");
      }
      out.push_back({k, std::string(1, c), l, cc});
      advance(1);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Linear combination plus constant, or a bare product of two variables.
struct Expr {
  std::vector<Term> terms;
  std::int64_t constant = 0;
  std::optional<std::pair<std::string, std::string>> product;
  bool bare_variable = false;

  bool is_constant() const { return terms.empty() && !product; }
  void add(std::int64_t c, const std::string& src) {
    for (auto& t : terms)
      if (t.src == src) {
        t.coeff += c;
        return;
      }
    terms.push_back({c, src});
  }
  void scale(std::int64_t k) {
    constant *= k;
    for (auto& t : terms) t.coeff *= k;
  }
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool at_end() const { return peek().kind == Tok::End; }

  Statement statement() {
    const auto& dst = expect(Tok::Ident, "variable name");
    const std::string name = dst.text;
    expect(Tok::Assign, "':='");
    const auto& start = peek();
    Expr e = expr();
    expect(Tok::Semi, "';'");
    if (e.product) return ProductStmt{name, e.product->first, e.product->second};
    if (e.constant != 0) fail(start, "nonzero constant in linear statement");
    LinearStmt lin{name, {}};
    for (auto& t : e.terms)
      if (t.coeff != 0) lin.terms.push_back(std::move(t));
    return lin;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(t.line) + ", column " +
                                            std::to_string(t.col) + ": " + what);
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      fail(peek(), std::string("expected ") + what + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    return next();
  }

  Expr expr() {
    Expr out;
    bool first = true;
    std::size_t term_count = 0;
    while (true) {
      std::int64_t sign = 1;
      const auto& tok = peek();
      if (tok.kind == Tok::Plus || tok.kind == Tok::Minus) {
        sign = tok.kind == Tok::Minus ? -1 : 1;
        next();
      } else if (!first) {
        break;
      }
      const auto& start = peek();
      Expr t = term();
      ++term_count;
      if (t.product) {
        if (sign != 1 || term_count > 1 || peek().kind == Tok::Plus || peek().kind == Tok::Minus)
          fail(start, "a product must be the whole right-hand side");
        out.product = t.product;
      } else {
        out.constant += sign * t.constant;
        for (const auto& x : t.terms) out.add(sign * x.coeff, x.src);
      }
      first = false;
    }
    if (out.product && term_count > 1) fail(peek(), "a product must be the whole right-hand side");
    return out;
  }

  Expr term() {
    std::vector<Expr> factors;
    std::vector<const Token*> starts;
    starts.push_back(&peek());
    factors.push_back(factor());
    while (peek().kind == Tok::Star) {
      next();
      starts.push_back(&peek());
      factors.push_back(factor());
    }
    std::size_t variable_factors = 0;
    for (const auto& f : factors) variable_factors += f.is_constant() ? 0 : 1;
    if (variable_factors == 2 && factors.size() == 2) {
      if (!factors[0].bare_variable || !factors[1].bare_variable)
        fail(*starts[0], "product operands must be single variables");
      Expr p;
      p.product = std::pair(factors[0].terms[0].src, factors[1].terms[0].src);
      return p;
    }
    if (variable_factors > 1) fail(*starts[0], "product of more than two variables");
    Expr acc;
    acc.constant = 1;
    std::size_t var_idx = factors.size();
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (!factors[i].is_constant()) var_idx = i;
    if (var_idx < factors.size()) {
      acc = factors[var_idx];
      acc.bare_variable = factors.size() == 1 && acc.bare_variable;
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (i != var_idx) acc.scale(factors[i].constant);
    return acc;
  }

  Expr factor() {
    const auto& tok = peek();
    Expr e;
    switch (tok.kind) {
      case Tok::Ident:
        next();
        e.terms.push_back({1, tok.text});
        e.bare_variable = true;
        return e;
      case Tok::Int:
        next();
        try {
          e.constant = std::stoll(tok.text);
        } catch (const std::exception&) {
          fail(tok, "integer out of range");
        }
        return e;
      case Tok::LParen: {
        next();
        e = expr();
        if (e.product) fail(tok, "products may not appear inside parentheses");
        e.bare_variable = false;
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail(tok, tok.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool matches_prefix(const std::string& name, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes) {
    if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) continue;
    if (std::all_of(name.begin() + static_cast<std::ptrdiff_t>(p.size()), name.end(),
                    [](unsigned char c) { return std::isdigit(c); }))
      return true;
  }
  return false;
}

}  // namespace

SlpProgram parse_slp(std::string_view text, const ParseOptions& options) {
  Parser parser(lex(text));
  std::vector<Statement> stmts;
  std::unordered_set<std::string> assigned;
  std::set<std::string> free_vars;
  auto use = [&](const std::string& n) {
    if (!assigned.count(n)) free_vars.insert(n);
  };
  while (!parser.at_end()) {
    auto s = parser.statement();
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      for (const auto& t : lin->terms) use(t.src);
    } else {
      const auto& p = std::get<ProductStmt>(s);
      use(p.left);
      use(p.right);
    }
    const auto& dst = target(s);
    if (!options.inputs && free_vars.count(dst))
      throw Error(ErrorKind::UseBeforeDefine, "'" + dst + "' is read before it is assigned");
    if (!assigned.insert(dst).second)
      throw Error(ErrorKind::ReassignedVariable, "'" + dst + "' assigned twice");
    stmts.push_back(std::move(s));
  }

  std::vector<std::string> inputs;
  if (options.inputs) {
    inputs = *options.inputs;
  } else {
    inputs.assign(free_vars.begin(), free_vars.end());
    std::sort(inputs.begin(), inputs.end(), natural_less);
  }
  std::vector<std::string> outputs;
  if (options.outputs) {
    outputs = *options.outputs;
  } else {
    for (const auto& s : stmts)
      if (matches_prefix(target(s), options.output_prefixes)) outputs.push_back(target(s));
    std::sort(outputs.begin(), outputs.end(), natural_less);
  }
  return SlpProgram(std::move(inputs), std::move(stmts), std::move(outputs));
}

namespace {

void append_signed(std::string& out, bool negative, bool first) {
  if (negative)
    out += '-';
  else if (!first)
    out += '+';
}

std::string print_linear(const LinearStmt& lin) {
  if (lin.terms.empty()) return "0";
  std::string out;
  std::vector<bool> done(lin.terms.size(), false);
  bool first = true;
  for (std::size_t i = 0; i < lin.terms.size(); ++i) {
    if (done[i]) continue;
    const auto c = lin.terms[i].coeff;
    const auto mag = c < 0 ? -c : c;
    const bool neg = c < 0;
    if (mag == 1) {
      append_signed(out, neg, first);
      out += lin.terms[i].src;
      done[i] = true;
      first = false;
      continue;
    }
    std::vector<std::size_t> group;
    for (std::size_t j = i; j < lin.terms.size(); ++j) {
      const auto cj = lin.terms[j].coeff;
      if (!done[j] && (cj == mag || cj == -mag)) group.push_back(j);
    }
    append_signed(out, neg, first);
    if (group.size() == 1) {
      out += lin.terms[i].src;
    } else {
      out += '(';
      for (std::size_t g = 0; g < group.size(); ++g) {
        const bool inner_neg = (lin.terms[group[g]].coeff < 0) != neg;
        append_signed(out, inner_neg, g == 0);
        out += lin.terms[group[g]].src;
      }
      out += ')';
    }
    out += '*' + std::to_string(mag);
    for (auto g : group) done[g] = true;
    first = false;
  }
  return out;
}

}  // namespace

std::string print_slp(const SlpProgram& prog) {
  std::ostringstream out;
  for (const auto& s : prog.statements()) {
    if (const auto* lin = std::get_if<LinearStmt>(&s)) {
      out << lin->dst << ":=" << print_linear(*lin) << ";\n";
    } else {
      const auto& p = std::get<ProductStmt>(s);
      out << p.dst << ":=" << p.left << '*' << p.right << ";\n";
    }
  }
  return out.str();
}

}  // namespace fsmul

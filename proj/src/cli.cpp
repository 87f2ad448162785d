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

#include "fsmul/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsmul/bilinear.hpp"
#include "fsmul/catalog.hpp"
#include "fsmul/codes.hpp"
#include "fsmul/search.hpp"
#include "fsmul/slp.hpp"

namespace fsmul::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // Shared.
  std::uint32_t field = 0;  // 0: command default
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 0;  // 0: command default
  std::size_t workers = 1;
  std::uint64_t samples = 0;
  bool json = false;

  std::string file;
  std::string name, bundle, out_prefix;
  std::string modulus;
  int degree = -1;
  std::string stage;
  std::string inputs;
  std::string values, x, y;
  std::string outer, inner;
  std::string l_file, r_file, p_file;
  std::string x_file, y_file, z_file;
  std::string params, positions;
  std::uint32_t q = 0;
  std::size_t k = 0, d = 0;
  std::size_t max_adds = 6;
  std::size_t rmax = 0;
  bool distinct_columns = false;
};

struct Result {
  Json result = Json::object();
  std::ostringstream text;
  int code = kExitOk;
};

// ---------------------------------------------------------------------------
// Argument helpers.

std::vector<std::int64_t> split_ints(const std::string& s, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Vector to_vector(const FieldSpec& f, const std::vector<std::int64_t>& v) {
  Vector out;
  for (auto x : v) out.push_back(f.reduce(x));
  return out;
}

FieldSpec field_or(const Options& o, std::uint32_t fallback) { return FieldSpec(o.field ? o.field : fallback); }

std::string read_text(const std::string& path) {
  if (path.empty()) throw UsageError("missing input file");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SlpProgram load_slp(const std::string& path, const std::string& inputs = {}) {
  ParseOptions po;
  if (!inputs.empty()) po.inputs = split_names(inputs);
  return parse_slp(read_text(path), po);
}

Matrix load_matrix(const std::string& path) {
  if (path.empty()) throw UsageError("missing matrix file");
  return read_matrix_file(path);
}

CodeParams parse_params(const Options& o, std::uint32_t q) {
  const auto v = split_ints(o.params, "--params");
  if (v.size() != 3 || v[0] <= 0 || v[1] <= 0 || v[2] <= 0) throw UsageError("--params expects r,k,d");
  return {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]), static_cast<std::size_t>(v[2]), q};
}

std::vector<std::size_t> parse_positions(const std::string& s) {
  std::vector<std::size_t> out;
  for (auto v : split_ints(s, "--positions")) {
    if (v < 0) throw UsageError("negative position");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.seed = o.seed;
  v.workers = o.workers;
  if (o.samples) v.samples = o.samples;
  return v;
}

SearchConfig search_config(const Options& o, std::size_t default_trials) {
  SearchConfig c;
  c.seed = o.seed;
  c.trials = o.trials ? o.trials : default_trials;
  c.workers = o.workers;
  c.max_adds = o.max_adds;
  c.distinct_columns = o.distinct_columns;
  c.r_max = o.rmax;
  return c;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<std::size_t> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  try {
    const auto n = std::stoul(name.substr(prefix.size()));
    if (n == 0) throw UsageError("'" + name + "' needs a positive size");
    return n;
  } catch (const std::logic_error&) {
    throw UsageError("bad generator '" + name + "'");
  }
}

// Polynomial-product generators: standard:N (N-term schoolbook) and
// karatsuba:K (K nested two-term Karatsuba levels, 2^K terms).
std::optional<LrpAlgorithm> generator_lrp(const std::string& name, const FieldSpec& f) {
  if (auto n = suffix_number(name, "standard:")) return standard_poly_mul(f, *n);
  if (auto k = suffix_number(name, "karatsuba:")) {
    auto alg = karatsuba(f);
    for (std::size_t i = 1; i < *k; ++i) alg = compose_poly_mul(alg, karatsuba(f));
    return alg;
  }
  return std::nullopt;
}

LrpAlgorithm lrp_by_name(const std::string& name, const Options& o) {
  if (auto alg = generator_lrp(name, field_or(o, 2))) return *alg;
  const auto* e = find_entry(name);
  if (!e) throw Error(ErrorKind::UnknownEntry, "no catalog entry '" + name + "'");
  if (e->kind != EntryKind::Bilinear) throw UsageError("'" + name + "' is not a bilinear algorithm");
  return entry_lrp(*e, o.field ? o.field : e->q);
}

LrpAlgorithm resolve_lrp(const Options& o) {
  if (!o.bundle.empty())
    return LrpAlgorithm(load_matrix(o.bundle + ".L"), load_matrix(o.bundle + ".R"), load_matrix(o.bundle + ".P"));
  if (o.name.empty()) throw UsageError("pass --name or --bundle");
  return lrp_by_name(o.name, o);
}

// Oracle for `alg`: explicit --modulus or --degree, else what the named
// algorithm is known to compute.
BilinearOracle resolve_oracle(const Options& o, const LrpAlgorithm& alg, std::uint64_t* samples) {
  const auto& f = alg.field();
  if (!o.modulus.empty()) return BilinearOracle::mod_poly_mul(f, parse_poly(f, o.modulus));
  if (o.degree >= 0) return BilinearOracle::poly_mul(f, static_cast<std::size_t>(o.degree), static_cast<std::size_t>(o.degree));
  if (o.bundle.empty()) {
    if (generator_lrp(o.name, f)) return BilinearOracle::poly_mul(f, alg.n_left() - 1, alg.n_right() - 1);
    if (const auto* e = find_entry(o.name)) {
      for (const auto& spec : e->oracles) {
        if (spec.q != f.q()) continue;
        if (spec.samples && samples && !o.samples) *samples = spec.samples;
        return spec.make();
      }
      if (!e->oracles.empty()) {
        auto spec = e->oracles.front();
        spec.q = f.q();
        return spec.make();
      }
    }
  }
  throw UsageError("no reference map known; pass --modulus or --degree");
}

void write_bundle(const std::string& prefix, const LrpAlgorithm& alg) {
  write_matrix_file(prefix + ".L", alg.L());
  write_matrix_file(prefix + ".R", alg.R());
  write_matrix_file(prefix + ".P", alg.P());
}

// ---------------------------------------------------------------------------
// JSON and text rendering.

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"q", m.field().q()}, {"data", rows}};
}

Json cost_json(const CostReport& c) { return {{"mul", c.mul}, {"add", c.add}, {"sca", c.sca}}; }

std::string cost_text(const CostReport& c) {
  return std::to_string(c.mul) + "M+" + std::to_string(c.add) + "A+" + std::to_string(c.sca) + "SCA";
}

std::string vec_text(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Json report_json(const VerifyReport& r) {
  Json j = {{"exhaustive", r.exhaustive}, {"pairs_checked", r.pairs_checked}, {"passed", r.passed()}};
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    j["first_mismatch"] = {{"index", m.index}, {"x", m.x}, {"y", m.y}, {"expected", m.expected}, {"actual", m.actual}};
  }
  return j;
}

std::string report_text(const VerifyReport& r) {
  std::string s = std::string(r.exhaustive ? "exhaustive" : "sampled") + " pairs=" + std::to_string(r.pairs_checked);
  if (r.passed()) return s + " pass";
  const auto& m = *r.first_mismatch;
  return s + " FAIL x=" + vec_text(m.x) + " y=" + vec_text(m.y) + " expected=" + vec_text(m.expected) +
         " actual=" + vec_text(m.actual);
}

Json lrp_json(const LrpAlgorithm& alg) {
  return {{"rank", alg.rank()}, {"L", matrix_json(alg.L())}, {"R", matrix_json(alg.R())}, {"P", matrix_json(alg.P())}};
}

void lrp_text(std::ostream& out, const LrpAlgorithm& alg) {
  out << "# L\n" << format_matrix(alg.L()) << "# R\n" << format_matrix(alg.R()) << "# P\n" << format_matrix(alg.P());
}

Json program_json(const SlpProgram& p) {
  return {{"inputs", p.inputs()}, {"outputs", p.outputs()}, {"text", print_slp(p)}};
}

// ---------------------------------------------------------------------------
// slp

int slp_parse(const Options& o, Result& r) {
  const auto prog = load_slp(o.file, o.inputs);
  const auto c = o.field ? cost(prog, FieldSpec(o.field)) : cost(prog);
  r.result = {{"program", program_json(prog)}, {"cost", cost_json(c)}};
  r.text << print_slp(prog) << "# inputs " << prog.inputs().size() << " outputs " << prog.outputs().size()
         << " cost " << cost_text(c) << "\n";
  return kExitOk;
}

int slp_eval(const Options& o, Result& r) {
  const auto prog = load_slp(o.file, o.inputs);
  const auto f = field_or(o, 2);
  const auto in = to_vector(f, split_ints(o.values, "--values"));
  if (in.size() != prog.inputs().size())
    throw UsageError("--values needs " + std::to_string(prog.inputs().size()) + " entries");
  const auto outv = SlpEvaluator(prog, f)(in);
  r.result = {{"q", f.q()}, {"outputs", outv}};
  r.text << vec_text(outv) << "\n";
  return kExitOk;
}

int slp_cost(const Options& o, Result& r) {
  const auto prog = load_slp(o.file, o.inputs);
  const auto c = o.field ? cost(prog, FieldSpec(o.field)) : cost(prog);
  r.result = cost_json(c);
  r.text << "mul=" << c.mul << " add=" << c.add << " sca=" << c.sca << "\n";
  return kExitOk;
}

int slp_transpose(const Options& o, Result& r) {
  const auto prog = load_slp(o.file, o.inputs);
  const auto t = transpose_slp(prog, SlpNames{});
  // Integer coefficients are checked modulo a large prime unless a field is given.
  const FieldSpec f = field_or(o, 65521);
  const bool ok = linear_matrix(t, f) == transpose(linear_matrix(prog, f));
  const auto c = o.field ? cost(t, f) : cost(t);
  r.result = {{"program", program_json(t)}, {"cost", cost_json(c)}, {"verified", ok}};
  r.text << print_slp(t) << "# cost " << cost_text(c) << (ok ? " verified" : " MISMATCH") << "\n";
  return ok ? kExitOk : kExitFail;
}

int slp_matrix(const Options& o, Result& r) {
  const auto prog = load_slp(o.file, o.inputs);
  const auto m = linear_matrix(prog, field_or(o, 2));
  r.result = matrix_json(m);
  r.text << format_matrix(m);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lrp

int lrp_eval_cmd(const Options& o, Result& r) {
  const auto alg = resolve_lrp(o);
  const auto& f = alg.field();
  const auto x = to_vector(f, split_ints(o.x, "--x")), y = to_vector(f, split_ints(o.y, "--y"));
  const auto z = lrp_eval(alg, x, y);
  r.result = {{"output", z}};
  r.text << vec_text(z) << "\n";
  return kExitOk;
}

int lrp_verify(const Options& o, Result& r) {
  const auto alg = resolve_lrp(o);
  auto vo = verify_options(o);
  const auto oracle = resolve_oracle(o, alg, &vo.samples);
  const auto rep = verify(alg, oracle, vo);
  r.result = {{"oracle", oracle.describe()}, {"report", report_json(rep)}};
  r.text << report_text(rep) << "\n";
  return rep.passed() ? kExitOk : kExitFail;
}

int lrp_fold(const Options& o, Result& r) {
  if (o.modulus.empty()) throw UsageError("--modulus is required");
  const auto alg = resolve_lrp(o);
  const auto& f = alg.field();
  const auto modulus = parse_poly(f, o.modulus);
  const LrpAlgorithm folded(alg.L(), alg.R(), fold(alg.P(), modulus));
  const auto rep = verify(folded, BilinearOracle::mod_poly_mul(f, modulus), verify_options(o));
  if (!o.out_prefix.empty()) write_bundle(o.out_prefix, folded);
  r.result = {{"modulus", format_poly(f, modulus)}, {"P", matrix_json(folded.P())}, {"report", report_json(rep)}};
  r.text << "# folded modulo " << format_poly(f, modulus) << "\n" << format_matrix(folded.P()) << report_text(rep) << "\n";
  return rep.passed() ? kExitOk : kExitFail;
}

int lrp_compose(const Options& o, Result& r) {
  if (o.outer.empty() || o.inner.empty()) throw UsageError("--outer and --inner are required");
  const auto outer = lrp_by_name(o.outer, o), inner = lrp_by_name(o.inner, o);
  const auto alg = compose_poly_mul(outer, inner, verify_options(o));
  const auto& f = alg.field();
  const auto rep = verify(alg, BilinearOracle::poly_mul(f, alg.n_left() - 1, alg.n_right() - 1), verify_options(o));
  if (!o.out_prefix.empty()) write_bundle(o.out_prefix, alg);
  r.result = {{"algorithm", lrp_json(alg)}, {"report", report_json(rep)}};
  r.text << "# rank " << alg.rank() << "\n";
  if (o.out_prefix.empty()) lrp_text(r.text, alg);
  r.text << report_text(rep) << "\n";
  return rep.passed() ? kExitOk : kExitFail;
}

IsotopyTriple resolve_isotopy(const Options& o) {
  if (!o.x_file.empty() || !o.y_file.empty() || !o.z_file.empty())
    return {load_matrix(o.x_file), load_matrix(o.y_file), load_matrix(o.z_file)};
  const auto* e = find_entry(o.name);
  if (!e || !e->isotopy) throw UsageError("pass --xmat, --ymat and --zmat");
  return entry_isotopy(*e);
}

int lrp_isotopy(const Options& o, Result& r) {
  const auto alg = resolve_lrp(o);
  const auto iso = isotopy_apply(alg, resolve_isotopy(o));
  if (!o.out_prefix.empty()) write_bundle(o.out_prefix, iso);
  Json j = {{"algorithm", lrp_json(iso)}};
  const bool square = iso.n_left() == iso.n_right() && iso.n_left() == iso.n_out();
  if (square) {
    const auto id = find_identity(iso);
    j["presemifield"] = is_presemifield(iso);
    j["identity"] = id ? Json(*id) : Json(nullptr);
    r.text << "presemifield=" << (j["presemifield"].get<bool>() ? "true" : "false")
           << " identity=" << (id ? vec_text(*id) : "none") << "\n";
  }
  if (o.out_prefix.empty()) lrp_text(r.text, iso);
  r.result = std::move(j);
  return kExitOk;
}

int lrp_contraction(const Options& o, Result& r) {
  const auto alg = resolve_lrp(o);
  const auto cs = contraction_space(alg);
  Json mats = Json::array();
  r.text << "dim=" << cs.dim << "\n";
  for (std::size_t j = 0; j < cs.matrices.size(); ++j) {
    mats.push_back(matrix_json(cs.matrices[j]));
    r.text << "# U" << j << "\n" << format_matrix(cs.matrices[j]);
  }
  r.result = {{"dim", cs.dim}, {"w_dim", w_space_dim(alg.L(), alg.R())}, {"matrices", mats}};
  return kExitOk;
}

int lrp_presemifield(const Options& o, Result& r) {
  const auto alg = resolve_lrp(o);
  const bool scan = is_presemifield(alg), spread = spread_set_check(alg);
  r.result = {{"presemifield", scan}, {"spread_set", spread}};
  r.text << "presemifield=" << (scan ? "true" : "false") << " spread_set=" << (spread ? "true" : "false") << "\n";
  return scan == spread ? kExitOk : kExitFail;
}

int lrp_identity(const Options& o, Result& r) {
  const auto id = find_identity(resolve_lrp(o));
  r.result = {{"identity", id ? Json(*id) : Json(nullptr)}};
  r.text << "identity " << (id ? vec_text(*id) : "none") << "\n";
  return kExitOk;
}

int lrp_stitch(const Options& o, Result& r) {
  const auto alg = resolve_lrp(o);
  const auto prog = [&] {
    if (!o.l_file.empty() || !o.r_file.empty() || !o.p_file.empty())
      return lrp_to_slp(alg, load_slp(o.l_file), load_slp(o.r_file), load_slp(o.p_file));
    const auto* e = find_entry(o.name);
    if (!e || e->program_text.empty()) throw UsageError("pass --l, --r and --p stage programs");
    const auto st = split_stages(entry_program(*e), e->n_left);
    return lrp_to_slp(alg, st.l, st.r, st.p);
  }();
  const bool ok = validate_lrp_slp(prog, alg, verify_options(o));
  const auto c = cost(prog, alg.field());
  r.result = {{"program", program_json(prog)}, {"cost", cost_json(c)}, {"verified", ok}};
  r.text << print_slp(prog) << "# cost " << cost_text(c) << (ok ? " verified" : " MISMATCH") << "\n";
  return ok ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// code

Matrix resolve_generator(const Options& o) {
  if (!o.file.empty()) return load_matrix(o.file);
  const auto* e = find_entry(o.name);
  if (!e || e->generator.empty()) throw UsageError("pass a generator file or a code --name");
  return entry_generator(*e, o.field ? o.field : e->q);
}

int code_mindist(const Options& o, Result& r) {
  const auto g = resolve_generator(o);
  const auto d = min_distance(g);
  r.result = {{"r", g.cols()}, {"k", rank(g)}, {"d", d}, {"q", g.field().q()}};
  r.text << "d=" << d << "\n";
  return kExitOk;
}

int code_check(const Options& o, Result& r) {
  const auto g = resolve_generator(o);
  const auto p = parse_params(o, g.field().q());
  const bool ok = check_params(g, p);
  r.result = {{"params", p.to_string()}, {"passed", ok}};
  r.text << p.to_string() << (ok ? " pass" : " FAIL") << "\n";
  return ok ? kExitOk : kExitFail;
}

int code_griesmer(const Options& o, Result& r) {
  const std::uint32_t q = o.q ? o.q : field_or(o, 2).q();
  if (o.k == 0 || o.d == 0) throw UsageError("--k and --d are required");
  const auto n = griesmer_min_length(q, o.k, o.d);
  r.result = {{"q", q}, {"k", o.k}, {"d", o.d}, {"min_length", n}};
  r.text << "griesmer n>=" << n << "\n";
  return kExitOk;
}

int code_shorten(const Options& o, Result& r) {
  const auto g = resolve_generator(o);
  const auto s = shorten(g, parse_positions(o.positions));
  const auto d = min_distance(s);
  r.result = {{"generator", matrix_json(s)}, {"r", s.cols()}, {"k", rank(s)}, {"d", d}};
  r.text << format_matrix(s) << "# [" << s.cols() << "," << rank(s) << "," << d << "]_" << s.field().q() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// opt, sslp, sweep

// Matrix to synthesize: a file, a code entry (G^T) or one stage of a
// bilinear algorithm, with P optionally folded by --modulus.
Matrix resolve_linear(const Options& o) {
  if (!o.file.empty()) return load_matrix(o.file);
  if (o.name.empty() && o.bundle.empty()) throw UsageError("pass a matrix file, --name or --bundle");
  if (const auto* e = find_entry(o.name); e && e->kind == EntryKind::Code)
    return transpose(entry_generator(*e, o.field ? o.field : e->q));
  const auto alg = resolve_lrp(o);
  if (o.stage == "L") return alg.L();
  if (o.stage == "R") return alg.R();
  if (o.stage == "P") return o.modulus.empty() ? alg.P() : fold(alg.P(), parse_poly(alg.field(), o.modulus));
  throw UsageError("--stage must be L, R or P");
}

int opt_cmd(const Options& o, Result& r, const std::string& method) {
  const auto m = resolve_linear(o);
  const auto cfg = search_config(o, 100);
  const auto res = method == "cse" ? cse_optimize(m, cfg) : method == "kernel" ? kernel_decompose(m, cfg) : best_slp(m, cfg);
  const bool ok = verify_linear_program(res.program, m, o.seed);
  r.result = {{"method", res.method}, {"trial", res.trial},   {"cost", cost_json(res.cost)},
              {"program", program_json(res.program)}, {"trials", cfg.trials}, {"verified", ok}};
  r.text << print_slp(res.program) << "# " << res.method << " trial " << res.trial << " cost " << cost_text(res.cost)
         << (ok ? " verified" : " MISMATCH") << "\n";
  return ok ? kExitOk : kExitFail;
}

bool witness_ok(const SslpWitness& w, const CodeParams& p) {
  return check_params(transpose(w.L), p) && linear_matrix(w.program, w.L.field()) == w.L;
}

Json witness_json(const SslpWitness& w, bool ok) {
  return {{"adds", w.adds}, {"trial", w.trial}, {"L", matrix_json(w.L)}, {"program", program_json(w.program)},
          {"verified", ok}};
}

int sslp_random(const Options& o, Result& r) {
  const auto p = parse_params(o, o.q ? o.q : field_or(o, 2).q());
  const auto cfg = search_config(o, 1000);
  const auto w = sslp_random_search(p, cfg);
  const bool ok = witness_ok(w, p);
  r.result = {{"params", p.to_string()}, {"trials", cfg.trials}, {"witness", witness_json(w, ok)}};
  r.text << print_slp(w.program) << "# " << p.to_string() << " adds=" << w.adds << " trial=" << w.trial
         << (ok ? " verified" : " MISMATCH") << "\n";
  return ok ? kExitOk : kExitFail;
}

int sslp_exhaustive_cmd(const Options& o, Result& r) {
  const auto p = parse_params(o, o.q ? o.q : field_or(o, 2).q());
  const auto cfg = search_config(o, 1);
  const auto res = sslp_exhaustive(p, cfg);
  r.result = {{"params", p.to_string()}, {"max_adds", cfg.max_adds}, {"distinct_columns", cfg.distinct_columns},
              {"programs", res.programs}};
  if (res.proved_absent()) {
    r.result["status"] = "ProvedAbsent";
    r.text << "ProvedAbsent programs=" << res.programs << "\n";
    return kExitOk;
  }
  const bool ok = witness_ok(*res.witness, p);
  r.result["status"] = "Witness";
  r.result["witness"] = witness_json(*res.witness, ok);
  r.text << print_slp(res.witness->program) << "Witness adds=" << res.witness->adds << " programs=" << res.programs
         << (ok ? " verified" : " MISMATCH") << "\n";
  return ok ? kExitOk : kExitFail;
}

int sweep_cmd(const Options& o, Result& r) {
  const auto alg = resolve_lrp(o);
  const auto rows = sweep_moduli(alg, search_config(o, 100), verify_options(o));
  Json arr = Json::array();
  bool all = true;
  for (const auto& row : rows) {
    const auto& f = alg.field();
    const bool ok = row.verification.passed() && verify_linear_program(row.best.program, fold(alg.P(), row.modulus), o.seed);
    all = all && ok;
    arr.push_back({{"modulus", format_poly(f, row.modulus)}, {"coeffs", format_coeffs(row.modulus)},
                   {"cost", cost_json(row.best.cost)}, {"method", row.best.method}, {"verified", ok}});
    r.text << format_poly(f, row.modulus) << " P " << cost_text(row.best.cost) << " " << row.best.method << " "
           << report_text(row.verification) << "\n";
  }
  r.result = {{"rows", arr}};
  return all ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// catalog, oracle

int catalog_list(const Options&, Result& r) {
  Json arr = Json::array();
  for (const auto& e : catalog()) {
    const char* kind = e.kind == EntryKind::Bilinear ? "bilinear" : "code";
    arr.push_back({{"name", e.name}, {"kind", kind}, {"q", e.q}, {"description", e.description}});
    r.text << e.name << "\t" << kind << "\tF_" << e.q << "\t" << e.description << "\n";
  }
  Json moduli = Json::array();
  for (const auto& m : catalog_moduli()) {
    moduli.push_back({{"name", m.name}, {"q", m.q}, {"coeffs", m.coeffs}, {"use", m.use}});
    r.text << "modulus\t" << m.name << "\tF_" << m.q << "\t" << m.use << "\n";
  }
  r.result = {{"entries", arr}, {"moduli", moduli}};
  return kExitOk;
}

int catalog_show(const Options& o, Result& r) {
  const auto& e = catalog_get(o.name);
  Json j = {{"name", e.name}, {"description", e.description}, {"q", e.q}};
  r.text << "# " << e.name << ": " << e.description << "\n";
  if (!e.program_text.empty()) {
    const auto prog = entry_program(e);
    j["program"] = program_json(prog);
    j["expected"] = cost_json(e.expected);
    r.text << print_slp(prog);
  }
  if (!e.generator.empty()) {
    const auto g = entry_generator(e, e.q);
    j["generator"] = matrix_json(g);
    j["params"] = e.params->to_string();
    r.text << format_matrix(g);
  }
  if (e.kind == EntryKind::Bilinear) {
    const auto alg = entry_lrp(e, o.field ? o.field : e.q);
    j["algorithm"] = lrp_json(alg);
    if (!o.out_prefix.empty()) {
      write_bundle(o.out_prefix, alg);
      const auto st = split_stages(entry_program(e), e.n_left);
      for (const auto& [ext, p] : {std::pair{".l.slp", &st.l}, {".r.slp", &st.r}, {".p.slp", &st.p}}) {
        std::ofstream(o.out_prefix + ext) << print_slp(*p);
      }
    }
  }
  r.result = std::move(j);
  return kExitOk;
}

int catalog_verify_cmd(const Options& o, Result& r) {
  const auto checks = catalog_verify_all(verify_options(o));
  Json arr = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    failed += !c.passed;
    arr.push_back({{"entry", c.entry}, {"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
    r.text << (c.passed ? "pass " : "FAIL ") << c.entry << " / " << c.check << (c.detail.empty() ? "" : ": ")
           << c.detail << "\n";
  }
  r.result = {{"checks", arr}, {"failed", failed}};
  r.text << (failed ? std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed"
                    : "all " + std::to_string(checks.size()) + " checks pass")
         << "\n";
  return failed ? kExitFail : kExitOk;
}

int oracle_table(const Options& o, Result& r) {
  const auto f = field_or(o, 2);
  BilinearOracle oracle = !o.modulus.empty() ? BilinearOracle::mod_poly_mul(f, parse_poly(f, o.modulus))
                          : o.degree >= 0
                              ? BilinearOracle::poly_mul(f, static_cast<std::size_t>(o.degree), static_cast<std::size_t>(o.degree))
                              : throw UsageError("pass --modulus or --degree");
  r.result = {{"oracle", oracle.describe()}, {"table", matrix_json(oracle.structure())}};
  r.text << "# " << oracle.describe() << "\n" << format_matrix(oracle.structure());
  return kExitOk;
}

// Argument list without --workers and --json, which must not affect results.
Json stable_inputs(const std::vector<std::string>& args) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--json") continue;
    if (a == "--workers") {
      ++i;
      continue;
    }
    if (a.rfind("--workers=", 0) == 0) continue;
    arr.push_back(a);
  }
  return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Straight-line programs, bilinear algorithms and codes over prime fields", "fsmul"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", o.field, "prime field order q");
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--trials", o.trials, "randomized trials");
  app.add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "sampled verification pairs");
  app.add_flag("--json", o.json, "JSON output");

  std::function<int(Result&)> action;
  std::string command;
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<int(const Options&, Result&)> fn) {
    auto* sub = parent->add_subcommand(name, desc);
    const auto path = parent == &app ? name : parent->get_name() + " " + name;
    sub->callback([&, path, fn] {
      command = path;
      action = [&o, fn](Result& r) { return fn(o, r); };
    });
    return sub;
  };
  auto file_arg = [&](CLI::App* a) { a->add_option("file", o.file, "input file"); };
  auto lrp_source = [&](CLI::App* a) {
    a->add_option("--name", o.name, "catalog entry, standard:N or karatsuba:K");
    a->add_option("--bundle", o.bundle, "prefix of <prefix>.L/.R/.P matrix files");
  };

  auto* slp = group("slp", "straight-line programs");
  for (auto [name, fn] : std::vector<std::pair<std::string, std::function<int(const Options&, Result&)>>>{
           {"parse", slp_parse}, {"eval", slp_eval}, {"cost", slp_cost}, {"transpose", slp_transpose}, {"matrix", slp_matrix}}) {
    auto* s = leaf(slp, name, "slp " + name, fn);
    file_arg(s);
    s->add_option("--inputs", o.inputs, "comma-separated input order");
    if (name == "eval") s->add_option("--values", o.values, "comma-separated input values")->required();
  }

  auto* lrp = group("lrp", "bilinear (L, R, P) algorithms");
  auto* le = leaf(lrp, "eval", "evaluate on one pair", lrp_eval_cmd);
  lrp_source(le);
  le->add_option("--x", o.x)->required();
  le->add_option("--y", o.y)->required();
  auto* lv = leaf(lrp, "verify", "check against a reference map", lrp_verify);
  lrp_source(lv);
  lv->add_option("--modulus", o.modulus, "reduce products modulo this polynomial");
  lv->add_option("--degree", o.degree, "plain polynomial product of this degree");
  auto* lf = leaf(lrp, "fold", "fold P modulo a polynomial", lrp_fold);
  lrp_source(lf);
  lf->add_option("--modulus", o.modulus)->required();
  lf->add_option("--out", o.out_prefix, "write the folded bundle");
  auto* lc = leaf(lrp, "compose", "nest two polynomial-product algorithms", lrp_compose);
  lc->add_option("--outer", o.outer)->required();
  lc->add_option("--inner", o.inner)->required();
  lc->add_option("--out", o.out_prefix, "write the composed bundle");
  auto* li = leaf(lrp, "isotopy", "apply (X, Y, Z)", lrp_isotopy);
  lrp_source(li);
  li->add_option("--xmat", o.x_file);
  li->add_option("--ymat", o.y_file);
  li->add_option("--zmat", o.z_file);
  li->add_option("--out", o.out_prefix);
  for (auto [name, fn, desc] : std::vector<std::tuple<std::string, std::function<int(const Options&, Result&)>, std::string>>{
           {"contraction", lrp_contraction, "contraction space"},
           {"presemifield", lrp_presemifield, "zero-divisor scan and spread-set test"},
           {"identity", lrp_identity, "two-sided identity"}})
    lrp_source(leaf(lrp, name, desc, fn));
  auto* ls = leaf(lrp, "stitch", "join stage programs into one bilinear program", lrp_stitch);
  lrp_source(ls);
  ls->add_option("--l", o.l_file);
  ls->add_option("--r", o.r_file);
  ls->add_option("--p", o.p_file);

  auto* code = group("code", "linear codes");
  auto code_source = [&](CLI::App* a) {
    file_arg(a);
    a->add_option("--name", o.name, "catalog code entry");
  };
  code_source(leaf(code, "mindist", "minimum distance", code_mindist));
  auto* cc = leaf(code, "check", "check [r,k,d] parameters", code_check);
  code_source(cc);
  cc->add_option("--params", o.params, "r,k,d")->required();
  auto* cg = leaf(code, "griesmer", "Griesmer length bound", code_griesmer);
  cg->add_option("--q", o.q);
  cg->add_option("--k", o.k)->required();
  cg->add_option("--d", o.d)->required();
  auto* csh = leaf(code, "shorten", "shorten on positions", code_shorten);
  code_source(csh);
  csh->add_option("--positions", o.positions)->required();

  auto* opt = group("opt", "linear program synthesis");
  for (const std::string name : {"cse", "kernel", "best"}) {
    auto* s = leaf(opt, name, "synthesize with " + name, [name](const Options& op, Result& r) { return opt_cmd(op, r, name); });
    file_arg(s);
    lrp_source(s);
    s->add_option("--stage", o.stage, "L, R or P");
    s->add_option("--modulus", o.modulus, "fold P first");
  }

  auto* sslp = group("sslp", "short programs for code generators");
  for (auto [name, fn] : std::vector<std::pair<std::string, std::function<int(const Options&, Result&)>>>{
           {"random", sslp_random}, {"exhaustive", sslp_exhaustive_cmd}}) {
    auto* s = leaf(sslp, name, "sslp " + name, fn);
    s->add_option("--q", o.q);
    s->add_option("--params", o.params, "r,k,d")->required();
    s->add_option("--max-adds", o.max_adds)->capture_default_str();
    s->add_flag("--distinct-columns", o.distinct_columns);
    s->add_option("--rmax", o.rmax, "row pool size, unit rows included");
  }

  lrp_source(leaf(&app, "sweep", "fold with every irreducible modulus", sweep_cmd));

  auto* cat = group("catalog", "built-in algorithms and codes");
  leaf(cat, "list", "list entries", catalog_list);
  auto* cs = leaf(cat, "show", "print one entry", catalog_show);
  cs->add_option("name", o.name)->required();
  cs->add_option("--out", o.out_prefix, "write the LRP bundle and stage programs");
  leaf(cat, "verify", "run every entry's checks", catalog_verify_cmd);

  auto* orc = group("oracle", "reference bilinear maps");
  auto* ot = leaf(orc, "table", "structure tensor", oracle_table);
  ot->add_option("--modulus", o.modulus);
  ot->add_option("--degree", o.degree);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r.code = action(r);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NotFound ? kExitFail : kExitUsage;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.json) {
    Json j = {{"schema", 1}, {"command", command}, {"inputs", stable_inputs(args)}, {"result", r.result},
              {"seed", o.seed}, {"elapsed_ms", ms}};
    out << j.dump(2) << "\n";
  } else {
    out << r.text.str();
  }
  return r.code;
}

}  // namespace fsmul::cli

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

#include "fsmul/catalog.hpp"

#include <algorithm>

namespace fsmul {
namespace {

std::vector<std::string> operand_names(std::size_t n) {
  std::vector<std::string> out;
  for (const char* p : {"a", "b"})
    for (std::size_t i = 0; i < n; ++i) out.push_back(p + std::to_string(i));
  return out;
}

std::string products(std::size_t r) {
  std::string s;
  for (std::size_t i = 0; i < r; ++i) {
    const auto k = std::to_string(i);
    s += "p" + k + ":=l" + k + "*r" + k + "; ";
  }
  return s + "\n";
}

CatalogEntry karatsuba_deg1() {
  CatalogEntry e;
  e.name = "karatsuba_deg1";
  e.description = "Karatsuba product of two linear polynomials";
  e.q = 3;
  e.program_text =
      "l0:=a0; l1:=a0-a1; l2:=a1;\n"
      "r0:=b0; r1:=b1-b0; r2:=b1;\n" +
      products(3) + "c0:=p0; c1:=p0+p1+p2; c2:=p2;\n";
  e.inputs = operand_names(2);
  e.n_left = 2;
  e.expected = {3, 4, 0};
  e.stage_adds = {1, 1, 2};
  e.oracles = {{2, 1, {}, 0}, {3, 1, {}, 0}, {101, 1, {}, 0}};
  return e;
}

CatalogEntry code_entry(std::string name, std::string description, std::string text, IntRows g,
                        CodeParams params, std::vector<std::uint32_t> fields, std::size_t adds) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.kind = EntryKind::Code;
  e.q = fields.front();
  e.program_text = std::move(text);
  e.generator = std::move(g);
  e.params = params;
  e.code_fields = std::move(fields);
  e.expected = {0, adds, 0};
  e.integer_cost = true;
  return e;
}

CatalogEntry golay() {
  CatalogEntry e;
  e.name = "golay_L";
  e.description = "Self-orthogonal ternary [12,6,6] generator";
  e.kind = EntryKind::Code;
  e.q = 3;
  e.generator = {{1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1}, {0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1},
                 {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2}, {0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2},
                 {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1}, {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0}};
  e.params = CodeParams{12, 6, 6, 3};
  e.code_fields = {3};
  e.self_contraction_dim = 11;
  return e;
}

CatalogEntry montgomery() {
  CatalogEntry e;
  e.name = "montgomery_deg4";
  e.description = "Rank-13 product of two degree-4 polynomials with integer coefficients";
  e.q = 101;
  e.program_text =
      "l7:=a0+a1; l8:=a0-a4; l6:=a4+a3; l3:=l7-l6; x7:=a2+l7; l0:=l6+x7; x9:=l6+a2; l1:=a0-x9; "
      "l2:=x7-a4; l4:=l1+a4; l5:=l2-a0; l9:=a4; l10:=a3; l11:=a1; l12:=a0;\n"
      "r7:=b0+b1; r8:=b0-b4; r6:=b4+b3; r3:=r7-r6; y7:=b2+r7; r0:=r6+y7; y9:=r6+b2; r1:=b0-y9; "
      "r2:=y7-b4; r4:=r1+b4; r5:=r2-b0; r9:=b4; r10:=b3; r11:=b1; r12:=b0;\n" +
      products(13) +
      "z15:=p1+p10-p8; z16:=p2+p11-p8; k2:=p6-p10; k3:=p7-p11; k4:=z15-p4; k5:=z16-p5; "
      "k9:=p12+p9; k10:=k2+z15-p3; k11:=p3+p0-k3-z16; c7:=k2-p9; c1:=k3-p12; c6:=k4+k9-k2; "
      "c2:=k5+k9-k3; c5:=k11-(k4+p9)*2-p12*3; c4:=k4+k5+k9*3+k10-k11; "
      "c3:=p0-k10-(k5+p12)*2-p9*3; c0:=p12; c8:=p9;\n";
  e.inputs = operand_names(5);
  e.n_left = 5;
  e.expected = {13, 53, 5};
  e.integer_cost = true;
  e.stage_adds = {11, 11, 31};
  e.p_sca = 5;
  e.oracles = {{2, 4, {}, 0}, {3, 4, {}, 0}, {101, 4, {}, 1000}};
  return e;
}

CatalogEntry s81() {
  CatalogEntry e;
  e.name = "S81_rank8";
  e.description = "Rank-8 presemifield of order 81";
  e.q = 3;
  e.program_text =
      "x4:=a1+a3; x5:=a0+a2; l4:=a2+x4;  y4:=b1+b2; y5:=b0+b3; r1:=b0+y4;\n"
      "l5:=a3+x5; l6:=a0+x4; l7:=a1+x5;  r2:=b2+y5; r3:=b3+y4; r4:=b1+y5;\n"
      "l0:=a0; l1:=a1; l2:=a2; l3:=a3;   r0:=b3; r5:=b0; r6:=b1; r7:=b2;\n" +
      products(8) + "n1:=p4+p3; z4:=p2+p1; c3:=p1+p0+n1; c0:=p5-p2-n1; c2:=p7+p3+z4; c1:=p6-p4+z4;\n";
  e.inputs = operand_names(4);
  e.n_left = 4;
  e.expected = {8, 22, 0};
  e.stage_adds = {6, 6, 10};
  e.presemifield = true;
  e.has_identity = false;
  e.isotopy = std::array<IntRows, 3>{
      IntRows{{2, 2, 1, 1}, {0, 1, 1, 2}, {0, 2, 1, 2}, {2, 2, 2, 1}},
      IntRows{{2, 1, 1, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}, {2, 2, 0, 2}},
      IntRows{{2, 0, 1, 2}, {1, 2, 2, 0}, {1, 1, 0, 1}, {0, 2, 1, 0}}};
  return e;
}

CatalogEntry f243() {
  CatalogEntry e;
  e.name = "F243_rank11";
  e.description = "Rank-11 multiplication in F_3[X]/(X^5-X+1)";
  e.q = 3;
  e.program_text =
      "l7:=a3-a4; x6:=a1+a0; l1:=x6-a2; l5:=a1-a4; l0:=a0+a2; l2:=a0-a3; l3:=l1-a3; l6:=a2-a3+l5; "
      "l8:=a1-l7; l9:=x6-l7; l10:=a2+l7; l4:=a4;\n"
      "r7:=b3-b4; y6:=b1+b0; r1:=y6-b2; r5:=b1-b4; r0:=b0+b2; r2:=b0-b3; r3:=r1-b3; r6:=b2-b3+r5; "
      "r8:=b1-r7; r9:=y6-r7; r10:=b2+r7; r4:=b4;\n" +
      products(11) +
      "n1:=p7+p6; k16:=p3-n1; q5:=p5+k16; q2:=p2+k16; z7:=p1-q5; n5:=p8+q2+p1; c3:=z7-p10-p4; "
      "c1:=q2+p0-z7; n7:=p0-p10-n5; c0:=p4-p7-p3-q5+n5; c4:=p9-n7; c2:=n7+n1-q5;\n";
  e.inputs = operand_names(5);
  e.n_left = 5;
  e.expected = {11, 44, 0};
  e.stage_adds = {12, 12, 20};
  e.oracles = {{3, 4, {1, -1, 0, 0, 0, 1}, 0}};
  e.presemifield = true;
  e.has_identity = true;
  return e;
}

CatalogEntry s243() {
  CatalogEntry e;
  e.name = "S243_rank10";
  e.description = "Rank-10 presemifield of order 243";
  e.q = 3;
  e.program_text =
      "l2:=a1+a4; x8:=a3+a4; x9:=a3-a4; l3:=a0+l2; l0:=a0-a1; l4:=a2+l3; l1:=l4-a4; l5:=a3+l2; "
      "l6:=a2-x8; l7:=l1-x8; l8:=a0+x9; l9:=a2+a1+x9;\n"
      "r2:=b1+b4; y8:=b3+b4; y9:=b3-b4; r3:=b0+r2; r0:=b0-b1; r4:=b2+r3; r1:=r4-b4; r5:=b3+r2; "
      "r6:=b2-y8; r7:=r1-y8; r8:=b0+y9; r9:=b2+b1+y9;\n" +
      products(10) +
      "z5:=p9-p4; z8:=p5+p2; z7:=p5-p2; z6:=p4-p1; c0:=p8+p7-p4+z7; c4:=z7-p6+z6; "
      "c1:=p6-p3+p0+z6; c2:=z8-p3-z5; c3:=z8-p7-p1+z5;\n";
  e.inputs = operand_names(5);
  e.n_left = 5;
  e.expected = {10, 43, 0};
  e.stage_adds = {13, 13, 17};
  e.presemifield = true;
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> v;
  v.push_back(karatsuba_deg1());
  v.push_back(code_entry(
      "c844", "Six-addition generator of an [8,4,4] code",
      "o0:=i0; o1:=i1; o2:=i2; o3:=i3; t4:=i0+i2; t5:=i1+i3; o4:=i1+t4; o5:=i0+t5; o6:=i3+t4; o7:=i2+t5;",
      {{1, 0, 0, 0, 1, 1, 1, 0}, {0, 1, 0, 0, 1, 1, 0, 1}, {0, 0, 1, 0, 1, 0, 1, 1}, {0, 0, 0, 1, 0, 1, 1, 1}},
      {8, 4, 4, 2}, {2, 3}, 6));
  v.push_back(code_entry(
      "c944", "Five-addition generator of a [9,4,4] code",
      "o0:=i0; o1:=i1; o2:=i2; o3:=i3; o4:=i0; t4:=i0+i3; o5:=i1+i2; o6:=i3+o5; o7:=i2+t4; o8:=i1+t4;",
      {{1, 0, 0, 0, 1, 0, 0, 1, 1}, {0, 1, 0, 0, 0, 1, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1, 1, 0}, {0, 0, 0, 1, 0, 0, 1, 1, 1}},
      {9, 4, 4, 2}, {2, 3}, 5));
  v.push_back(code_entry(
      "c1044", "Four-addition generator of a [10,4,4] code",
      "o0:=i0; o1:=i1; o2:=i2; o3:=i3; o4:=i3; o5:=i3+i2; o6:=o5+i1; o8:=i1+i0; o7:=o8+i2; o9:=i0;",
      {{1, 0, 0, 0, 0, 0, 0, 1, 1, 1}, {0, 1, 0, 0, 0, 0, 1, 1, 1, 0}, {0, 0, 1, 0, 0, 1, 1, 1, 0, 0}, {0, 0, 0, 1, 1, 1, 1, 0, 0, 0}},
      {10, 4, 4, 2}, {2, 3}, 4));
  v.push_back(code_entry(
      "c1355", "Eight-addition generator of a binary [13,5,5] code",
      "o0:=i0; o1:=i1; o2:=i2; o3:=i3; o4:=i4; o5:=i4+i3; o6:=i2+i3; o7:=i4+i0; o8:=i4+i1; o9:=o6+i1; "
      "o10:=o7+o2; o11:=o8+o10; o12:=o11+o6;",
      {{1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1},
       {0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1},
       {0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0},
       {0, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1},
       {0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0}},
      {13, 5, 5, 2}, {2}, 8));
  v.push_back(golay());
  v.push_back(montgomery());
  v.push_back(s81());
  v.push_back(f243());
  v.push_back(s243());
  return v;
}

ReferenceRecord exact(std::string table, std::string object, std::string quantity, std::int64_t v) {
  return {std::move(table), std::move(object), std::move(quantity), v, v, std::to_string(v)};
}
ReferenceRecord range(std::string table, std::string object, std::string quantity, std::int64_t lo,
                      std::int64_t hi) {
  return {std::move(table), std::move(object), std::move(quantity), lo, hi,
          "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"};
}
ReferenceRecord text(std::string table, std::string object, std::string quantity, std::string t) {
  return {std::move(table), std::move(object), std::move(quantity), 0, 0, std::move(t)};
}

std::vector<ReferenceRecord> build_reference() {
  std::vector<ReferenceRecord> v;
  const std::string tr = "tensor_rank";
  for (const auto& [obj, r] : std::vector<std::pair<std::string, int>>{
           {"F_2^4", 9}, {"S_2^4 #2", 9}, {"S_2^4 #3", 9}, {"F_3^4", 9}, {"S_3^4 #9", 9},
           {"S_3^4 #1-#8,#10,#11", 8}, {"F_2^5", 13}, {"S_2^5 #1-#6", 13}, {"F_3^5", 11},
           {"S_3^5 #2", 10}, {"S_3^5 #4", 10}, {"S_3^5 #3", 11}, {"S_3^5 #5", 11}, {"S_3^5 #6", 11},
           {"F_2^6", 15}})
    v.push_back(exact(tr, obj, "rank", r));
  v.push_back(text(tr, "S_3^5 #7-#12", "rank", ">=11"));
  v.push_back(range(tr, "F_3^6", "rank", 12, 15));
  v.push_back(range(tr, "F_2^7", "rank", 18, 22));
  v.push_back(range(tr, "F_2^8", "rank", 20, 24));

  const std::string ps = "partially_symmetric_rank_243";
  for (const auto& [obj, r, sols] : std::vector<std::tuple<std::string, int, std::string>>{
           {"F_3^5", 11, "121"}, {"S_3^5 #2", 10, "11"}, {"S_3^5 #3", 11, "121"},
           {"S_3^5 #4", 10, "1"}, {"S_3^5 #5", 11, "22"}, {"S_3^5 #6", 11, "31"},
           {"S_3^5 #7", 12, "1310980"}}) {
    v.push_back(exact(ps, obj, "rank", r));
    v.push_back(text(ps, obj, "solutions", sols));
  }

  const std::string ss = "sslp";
  for (const auto& [obj, a] : std::vector<std::pair<std::string, int>>{
           {"[8,4,4]_2", 6}, {"[9,4,4]_2", 5}, {"[10,4,4]_2", 4}, {"[13,5,5]_2", 8},
           {"[8,4,4]_3", 6}, {"[9,4,4]_3", 5}, {"[10,4,4]_3", 4}})
    v.push_back(exact(ss, obj, "adds", a));
  v.push_back(range(ss, "[10,5,5]_3", "adds", 5, 12));
  v.push_back(range(ss, "[11,5,5]_3", "adds", 0, 12));
  v.push_back(range(ss, "[12,5,5]_3", "adds", 0, 12));
  v.push_back(range(ss, "[13,5,5]_3", "adds", 0, 11));

  const std::string m81 = "mult_81";
  v.push_back(text(m81, "standard mod X^4+X-1", "ops", "16M+15A (0+0+15)"));
  v.push_back(text(m81, "Karatsuba x Karatsuba mod 1+X+X^2+X^3+X^4", "ops", "9M+21A (5+5+11)"));
  v.push_back(text(m81, "S_3^4 rank 8", "ops", "8M+22A (6+6+10)"));

  const std::string d4 = "deg4_poly";
  v.push_back(text(d4, "standard", "ops", "25M+16A (0+0+16)"));
  v.push_back(text(d4, "Montgomery", "ops", "13M+58A (11+11+31 ADD, 0+0+5 SCA)"));
  v.push_back(text(d4, "Toom-5", "ops", "9M+113A (19+19+32 ADD, 11+11+21 SCA)"));
  v.push_back(text(d4, "standard (alternative count)", "ops", "25M+16A"));
  v.push_back(text(d4, "Montgomery (alternative count)", "ops", "13M+62A"));
  v.push_back(text(d4, "Toom-5 (alternative count)", "ops", "9M+140A"));

  const std::string f2 = "deg4_char2";
  v.push_back(text(f2, "standard mod 2", "ops", "25M+16A"));
  v.push_back(text(f2, "Montgomery mod 2", "ops", "13M+37A (9+9+19)"));
  v.push_back(text(f2, "standard F_2^5 mod X^5+X^2+1", "ops", "25M+24A (0+0+24)"));
  v.push_back(text(f2, "Montgomery F_2^5 mod X^5+X^4+X^2+X+1", "ops", "13M+36A (9+9+18)"));
  v.push_back(text(f2, "S_2^5 #2", "ops", "13M+39A (12+9+18)"));

  const std::string m243 = "mult_243";
  v.push_back(text(m243, "standard mod X^5-X+1", "ops", "25M+24A"));
  v.push_back(text(m243, "Montgomery mod X^5+X^4-X^3-X^2-1", "ops", "13M+42A (11+11+20)"));
  v.push_back(text(m243, "rank 12 mod X^5-X^4+X^3+X^2+X+1", "ops", "12M+47A (14+14+19)"));
  v.push_back(text(m243, "F_3^5 mod X^5-X+1", "ops", "11M+44A (12+12+20)"));
  v.push_back(text(m243, "S_3^5", "ops", "10M+43A (13+13+17)"));
  return v;
}

std::string cost_string(const CostReport& c) {
  return std::to_string(c.mul) + "M+" + std::to_string(c.add) + "A+" + std::to_string(c.sca) + "S";
}

Matrix from_int_rows(std::uint32_t q, const IntRows& rows) { return Matrix::from_rows(FieldSpec(q), rows); }

// Runs one check, turning a thrown Error into a failed row.
template <typename Fn>
void run_check(std::vector<CatalogCheck>& out, const std::string& entry, std::string check, Fn&& fn) {
  CatalogCheck c{entry, std::move(check), false, {}};
  try {
    c.passed = fn(c.detail);
  } catch (const std::exception& ex) {
    c.passed = false;
    c.detail = ex.what();
  }
  out.push_back(std::move(c));
}

void verify_bilinear(const CatalogEntry& e, const VerifyOptions& options, std::vector<CatalogCheck>& out) {
  const auto prog = entry_program(e);
  const FieldSpec fq(e.q);
  auto count = [&](const SlpProgram& p) { return e.integer_cost ? cost(p) : cost(p, fq); };

  run_check(out, e.name, "roundtrip", [&](std::string&) {
    ParseOptions po;
    po.inputs = prog.inputs();
    po.outputs = prog.outputs();
    return parse_slp(print_slp(prog), po) == prog;
  });
  run_check(out, e.name, "cost", [&](std::string& d) {
    const auto c = count(prog);
    d = cost_string(c) + " expected " + cost_string(e.expected);
    return c == e.expected;
  });
  if (e.stage_adds) {
    run_check(out, e.name, "stages", [&](std::string& d) {
      const auto st = split_stages(prog, e.n_left);
      const std::array<std::size_t, 3> got{count(st.l).add, count(st.r).add, count(st.p).add};
      const auto& want = *e.stage_adds;
      d = std::to_string(got[0]) + "+" + std::to_string(got[1]) + "+" + std::to_string(got[2]);
      return got == want && count(st.p).sca == e.p_sca && count(st.l).sca == 0 && count(st.r).sca == 0;
    });
  }
  for (const auto& o : e.oracles) {
    run_check(out, e.name, "oracle q=" + std::to_string(o.q), [&](std::string& d) {
      auto opts = options;
      if (o.samples) opts.samples = o.samples;
      const auto alg = entry_lrp(e, o.q);
      const auto rep = verify(alg, o.make(), opts);
      // The full program must agree with its own stages as well.
      const bool stitched = validate_lrp_slp(prog, alg, opts);
      d = std::string(rep.exhaustive ? "exhaustive" : "sampled") + " pairs=" + std::to_string(rep.pairs_checked);
      return rep.passed() && stitched;
    });
  }
  const auto alg = entry_lrp(e, e.q);
  if (e.oracles.empty()) {
    run_check(out, e.name, "stitch", [&](std::string&) {
      const auto st = split_stages(prog, e.n_left);
      return validate_lrp_slp(lrp_to_slp(alg, st.l, st.r, st.p), alg, options);
    });
  }
  if (e.presemifield) {
    run_check(out, e.name, "presemifield", [&](std::string& d) {
      const bool scan = is_presemifield(alg), spread = spread_set_check(alg);
      d = std::string("scan=") + (scan ? "true" : "false") + " spread=" + (spread ? "true" : "false");
      return scan && spread;
    });
  }
  if (e.has_identity) {
    run_check(out, e.name, "identity", [&](std::string& d) {
      const bool found = find_identity(alg).has_value();
      d = found ? "present" : "absent";
      return found == *e.has_identity;
    });
  }
  if (e.isotopy) {
    run_check(out, e.name, "isotopy", [&](std::string& d) {
      const auto iso = isotopy_apply(alg, entry_isotopy(e));
      const auto id = find_identity(iso);
      d = "identity ";
      if (id) {
        for (auto x : *id) d += std::to_string(x);
      } else {
        d += "absent";
      }
      return is_presemifield(iso) && spread_set_check(iso);
    });
  }
}

void verify_code(const CatalogEntry& e, std::vector<CatalogCheck>& out) {
  for (auto q : e.code_fields) {
    const auto tag = " q=" + std::to_string(q);
    const auto g = entry_generator(e, q);
    auto p = *e.params;
    p.q = q;
    run_check(out, e.name, "params" + tag, [&](std::string& d) {
      d = p.to_string() + " d=" + std::to_string(min_distance(g));
      return check_params(g, p);
    });
    if (!e.program_text.empty()) {
      run_check(out, e.name, "program" + tag, [&](std::string& d) {
        const auto prog = entry_program(e);
        const auto c = cost(prog, FieldSpec(q));
        d = std::to_string(c.add) + " adds";
        return linear_matrix(prog, FieldSpec(q)) == transpose(g) && c == e.expected;
      });
    }
    if (e.self_contraction_dim) {
      run_check(out, e.name, "self contraction" + tag, [&](std::string& d) {
        const auto l = transpose(g);
        Matrix sum(l.field(), l.cols(), l.cols());
        for (std::size_t i = 0; i < l.rows(); ++i)
          for (std::size_t a = 0; a < l.cols(); ++a)
            for (std::size_t b = 0; b < l.cols(); ++b)
              sum.set(a, b, l.field().add(sum(a, b), l.field().mul(l(i, a), l(i, b))));
        const auto dim = w_space_dim(l, l);
        d = "dim=" + std::to_string(dim);
        return sum.is_zero() && dim == *e.self_contraction_dim;
      });
    }
  }
}

}  // namespace

BilinearOracle OracleSpec::make() const {
  const FieldSpec f(q);
  if (modulus.empty()) return BilinearOracle::poly_mul(f, degree, degree);
  return BilinearOracle::mod_poly_mul(f, make_poly(f, modulus));
}

SlpProgram entry_program(const CatalogEntry& e) {
  if (e.program_text.empty()) throw Error(ErrorKind::NotFound, "entry '" + e.name + "' has no program");
  ParseOptions po;
  if (!e.inputs.empty()) po.inputs = e.inputs;
  return parse_slp(e.program_text, po);
}

LrpAlgorithm entry_lrp(const CatalogEntry& e, std::uint32_t q) {
  if (e.kind != EntryKind::Bilinear) throw Error(ErrorKind::InvalidArgument, "entry '" + e.name + "' is not bilinear");
  return lrp_from_slp(entry_program(e), FieldSpec(q), e.n_left);
}

Matrix entry_generator(const CatalogEntry& e, std::uint32_t q) {
  if (e.generator.empty()) throw Error(ErrorKind::InvalidArgument, "entry '" + e.name + "' has no generator");
  return from_int_rows(q, e.generator);
}

IsotopyTriple entry_isotopy(const CatalogEntry& e) {
  if (!e.isotopy) throw Error(ErrorKind::NotFound, "entry '" + e.name + "' has no isotopy");
  const auto& t = *e.isotopy;
  return {from_int_rows(e.q, t[0]), from_int_rows(e.q, t[1]), from_int_rows(e.q, t[2])};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorKind::UnknownEntry, "no catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

const std::vector<NamedModulus>& catalog_moduli() {
  static const std::vector<NamedModulus> moduli = {
      {"X^4+X-1", 3, {-1, 1, 0, 0, 1}, "standard folding for the field of order 81"},
      {"1+X+X^2+X^3+X^4", 3, {1, 1, 1, 1, 1}, "Karatsuba folding for the field of order 81"},
      {"X^5+X^2+1", 2, {1, 0, 1, 0, 0, 1}, "standard folding for the field of order 32"},
      {"X^5+X^4+X^2+X+1", 2, {1, 1, 1, 0, 1, 1}, "Montgomery folding for the field of order 32"},
      {"X^5-X+1", 3, {1, -1, 0, 0, 0, 1}, "field of order 243, rank 11"},
      {"X^5+X^4-X^3-X^2-1", 3, {-1, 0, -1, -1, 1, 1}, "Montgomery folding for the field of order 243"},
      {"X^5-X^4+X^3+X^2+X+1", 3, {1, 1, 1, 1, -1, 1}, "rank-12 folding for the field of order 243"},
  };
  return moduli;
}

const std::vector<ReferenceRecord>& reference_tables() {
  static const std::vector<ReferenceRecord> records = build_reference();
  return records;
}

std::vector<CatalogCheck> catalog_verify(const CatalogEntry& e, const VerifyOptions& options) {
  std::vector<CatalogCheck> out;
  if (e.kind == EntryKind::Bilinear)
    verify_bilinear(e, options, out);
  else
    verify_code(e, out);
  return out;
}

std::vector<CatalogCheck> catalog_verify_all(const VerifyOptions& options) {
  std::vector<CatalogCheck> out;
  for (const auto& e : catalog()) {
    auto rows = catalog_verify(e, options);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  for (const auto& m : catalog_moduli()) {
    run_check(out, "modulus " + m.name, "irreducible", [&](std::string&) {
      const FieldSpec f(m.q);
      return is_irreducible(f, make_poly(f, m.coeffs));
    });
  }
  return out;
}

}  // namespace fsmul

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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fsmul/cli.hpp"
#include "json.hpp"

namespace fsmul {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = call(args);
  REQUIRE(r.code == cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  j.erase("elapsed_ms");
  return j;
}

fs::path scratch_dir() {
  const auto d = fs::temp_directory_path() / "fsmul_cli_test";
  fs::create_directories(d);
  return d;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

TEST_SUITE("cli") {

TEST_CASE("text commands") {
  auto r = call({"lrp", "verify", "--name", "karatsuba_deg1", "--degree", "1", "--field", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "exhaustive pairs=81 pass\n");
  r = call({"code", "mindist", "--name", "golay_L", "--field", "3"});
  CHECK(r.out == "d=6\n");
  r = call({"code", "griesmer", "--q", "2", "--k", "4", "--d", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find('8') != std::string::npos);
  r = call({"catalog", "list"});
  CHECK(r.out.find("S243_rank10") != std::string::npos);
}

TEST_CASE("program files") {
  const auto dir = scratch_dir();
  write(dir / "eq.slp", "t0:=i0+i2; t1:=i1+i3; o0:=t0; o1:=t1+i0;");
  auto r = call({"slp", "cost", (dir / "eq.slp").string()});
  CHECK(r.code == cli::kExitOk);
  const auto j = json_of({"slp", "cost", (dir / "eq.slp").string()});
  CHECK(j["result"]["add"] == 3);
  CHECK(j["result"]["mul"] == 0);
  r = call({"slp", "eval", (dir / "eq.slp").string(), "--values", "1,1,1,1", "--field", "2"});
  CHECK(r.code == cli::kExitOk);
  r = call({"slp", "cost", (dir / "missing.slp").string()});
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("a broken bundle fails verification") {
  const auto dir = scratch_dir();
  write(dir / "kb.L", "3 2 3\n1 0\n1 2\n0 1\n");
  write(dir / "kb.R", "3 2 3\n1 0\n2 1\n0 1\n");
  write(dir / "kb.P", "3 3 3\n1 0 0\n1 1 1\n0 0 1\n");
  const auto bundle = (dir / "kb").string();
  CHECK(call({"lrp", "verify", "--bundle", bundle, "--degree", "1"}).code == cli::kExitOk);
  write(dir / "kb.P", "3 3 3\n1 0 0\n1 1 0\n0 0 1\n");
  const auto r = call({"lrp", "verify", "--bundle", bundle, "--degree", "1"});
  CHECK(r.code == cli::kExitFail);
  const auto j = nlohmann::json::parse(call({"--json", "lrp", "verify", "--bundle", bundle, "--degree", "1"}).out);
  CHECK(j["result"]["report"]["passed"] == false);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == cli::kExitUsage);
  CHECK(call({"bogus"}).code == cli::kExitUsage);
  CHECK(call({"catalog", "show", "no_such_entry"}).code == cli::kExitUsage);
  CHECK(call({"code", "check", "--name", "c844"}).code == cli::kExitUsage);
  CHECK(call({"--workers", "0", "catalog", "list"}).code == cli::kExitUsage);
}

TEST_CASE("json envelope") {
  const auto j = json_of({"code", "mindist", "--name", "c844"});
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "code mindist");
  CHECK(j["inputs"] == nlohmann::json::array({"code", "mindist", "--name", "c844"}));
  CHECK(j.contains("seed"));
  CHECK(j["result"]["d"] == 4);
}

TEST_CASE("search output ignores the worker count") {
  const std::vector<std::vector<std::string>> cmds = {
      {"opt", "best", "--name", "c1044", "--trials", "40"},
      {"sslp", "random", "--q", "3", "--params", "9,4,4", "--trials", "100"},
      {"sweep", "--name", "standard:3", "--field", "2", "--trials", "5"},
  };
  for (const auto& c : cmds) {
    auto one = c, four = c;
    one.insert(one.end(), {"--workers", "1"});
    four.insert(four.end(), {"--workers", "4"});
    CHECK(json_of(one) == json_of(four));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace fsmul

// Copyright 2026 The crnreach Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using crnreach::testing::dataPath;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = crnreach::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("crnreach_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("classify") {
  const Run r = cli({"classify", dataPath("excrn_d.crn")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "feed-forward: no"));
  CHECK(has(r.out, "1-source, 1-consuming"));
  CHECK(has(r.out, "autogenesis rules: yes"));
}

TEST_CASE("reach with cross-check") {
  const std::string file = scratch("ff.crn", "a -> c\nc + c -> d\nconfig init: 4a\nconfig target: 2d\n");
  const Run r = cli({"reach", file, "--cross-check"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "method: ff-ss-nv"));
  CHECK(has(r.out, "agreement: true"));
}

TEST_CASE("structured output") {
  const Run r = cli({"reach", dataPath("divergence.crn"), "--format", "structured"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["format_version"] == 1);
  CHECK(doc["decision"]["verdict"] == "reachable");
  CHECK(doc["decision"]["method"] == "ff-sc-na");
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli({"reach", "/nonexistent/file.crn"}).code == 2);
  CHECK(cli({"reach", scratch("bad.crn", "a -> -> b\n")}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"reach", dataPath("divergence.crn"), "--force-method", "nope"}).code == 2);
}

TEST_CASE("forced methods report precondition warnings") {
  const Run r = cli({"reach", dataPath("divergence.crn"), "--force-method", "ff-ss-nv"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "precondition_violated"));
}

TEST_CASE("generate then solve") {
  const Run gen = cli({"gen", "hampath", dataPath("hampath_graph.txt")});
  REQUIRE(gen.code == 0);
  const std::string file = scratch("hampath.crn", gen.out);
  const Run r = cli({"reach", file, "--cross-check"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verdict: reachable"));
  CHECK(has(r.out, "agreement: true"));

  const Run sat = cli({"gen", "sat", scratch("f.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")});
  REQUIRE(sat.code == 0);
  const Run prod = cli({"produce", scratch("sat.crn", sat.out)});
  CHECK(prod.code == 0);
  CHECK(has(prod.out, "verdict: unreachable"));

  const Run gad = cli({"gen", "gadgets", dataPath("gadgets/rotate.gad"), "--mode", "reachability"});
  REQUIRE(gad.code == 0);
  const Run uni = cli({"universal", scratch("gad.crn", gad.out)});
  CHECK(uni.code == 0);
  CHECK(has(uni.out, "verdict: reachable"));
}

TEST_CASE("certificates from the command line") {
  const std::string inst = scratch("cert.crn", "a -> c\nc + c -> d\nconfig init: 4a\nconfig target: 2d\n");
  const std::string certFile = (fs::temp_directory_path() / "crnreach_cli_cert.txt").string();
  CHECK(cli({"reach", inst, "--emit-cert", certFile}).code == 0);
  const Run ok = cli({"verify-cert", inst, certFile});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "certificate valid: yes"));
  const Run bad = cli({"verify-cert", inst, scratch("badcert.txt", "block 0 3\n")});
  CHECK(bad.code == 0);
  CHECK(has(bad.out, "certificate valid: no"));
}

TEST_CASE("split") {
  const Run r = cli({"split", scratch("pp.crn", "a + b -> c + d\n")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "a + b -> m_1"));
  CHECK(has(r.out, "m_1 -> c + d"));
}

TEST_CASE("batch is reproducible") {
  const std::vector<std::string> args{"batch", "--family", "ff-ss-nv", "--count", "20", "--seed", "5"};
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--jobs", "3"});
  CHECK(cli(threaded).out == a.out);
  CHECK(cli({"batch", dataPath("divergence.crn"), dataPath("excrn_b.crn")}).code == 2);
}

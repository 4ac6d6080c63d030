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

#include "crnreach/random_instances.hpp"
#include "crnreach/report.hpp"
#include "crnreach/text_format.hpp"
#include "support.hpp"

using namespace crnreach;

TEST_CASE("rule syntax") {
  const Crn water = parseCrn("2H + O -> W");
  CHECK(water.speciesCount() == 3);
  CHECK(water.rules()[0].reactants() == water.configuration({{"H", 2}, {"O", 1}}));
  CHECK(water.rules()[0].products() == water.configuration({{"W", 1}}));
  const Crn v = parseCrn("a + b -> 0");
  CHECK(v.rules()[0].traits().size == RuleSize{2, 0});
  CHECK(v.rules()[0].traits().isVoid);
  const auto doc = parseCrnDocument("a -> b\nconfig init: 0\n");
  CHECK(doc.configs.at("init").isZero());
  CHECK(formatMultiset(water, water.configuration({{"H", 2}, {"O", 1}})) == "2H + O");
  CHECK(formatMultiset(water, water.zero()) == "0");
}

TEST_CASE("parse errors carry positions") {
  try {
    parseCrn("a -> b\na + -> c\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parseCrn("a -> b -> c"), ParseError);
  CHECK_THROWS_AS(parseInstance("a -> b\nconfig init: q\nconfig target: b"), ParseError);
  CHECK_THROWS_AS(parseInstance("a -> b\nconfig init: a\n"), ParseError);
  CHECK_THROWS_AS(parseInstance("a -> b\nconfig init: a\nproblem: produce b 0\n"), ParseError);
  CHECK_THROWS_AS(parseCrn("species: a a\n"), ParseError);
}

TEST_CASE("instances round-trip") {
  const std::string canonical =
      "species: a b c\n"
      "a + b -> c\n"
      "c -> 2a\n"
      "config init: 3a + b\n"
      "config target: c\n"
      "problem: reach\n";
  CHECK(formatInstance(parseInstance(canonical)) == canonical);
  const std::string production =
      "species: a b\n"
      "a -> b\n"
      "config init: a\n"
      "problem: produce b 1\n";
  CHECK(formatInstance(parseInstance(production)) == production);

  Rng rng(8);
  for (int k = 0; k < 300; ++k) {
    const Instance inst = randomInstance(rng, randomFamilies()[k % randomFamilies().size()]);
    const std::string text = formatInstance(inst);
    const Instance back = parseInstance(text);
    CHECK(back.crn() == inst.crn());
    CHECK(back.initial() == inst.initial());
    CHECK(back.target() == inst.target());
    CHECK(formatInstance(back) == text);
  }
}

TEST_CASE("auxiliary formats round-trip") {
  const Digraph g = parseDigraph(crnreach::testing::readData("hampath_graph.txt"));
  CHECK(g.vertices.size() == 5);
  CHECK(g.edges.size() == 6);
  CHECK(g.vertices[*g.source] == "S");
  const Digraph g2 = parseDigraph(formatDigraph(g));
  CHECK(g2.vertices == g.vertices);
  CHECK(g2.edges == g.edges);
  CHECK(g2.source == g.source);

  const Hypergraph h{2, 2, 2, {{0, 1, 0}, {1, 0, 1}}};
  const Hypergraph h2 = parseHypergraph(formatHypergraph(h));
  CHECK(h2.xCount == 2);
  CHECK(h2.edges == h.edges);

  const Cnf f{3, {{1, -2, 3}, {-1, -1, 2}}};
  const Cnf f2 = parseDimacs(formatDimacs(f));
  CHECK(f2.variables == 3);
  CHECK(f2.clauses == f.clauses);
  CHECK(parseDimacs("c comment\np cnf 2 1\n1 -2 2 0\n").clauses.size() == 1);

  const GadgetSystem sys = parseGadgetSystem(crnreach::testing::readData("gadgets/rotate_toggle_loop.gad"));
  CHECK(sys.gadgets.size() == 2);
  CHECK(sys.wires.size() == 4);
  const GadgetSystem sys2 = parseGadgetSystem(formatGadgetSystem(sys));
  CHECK(formatGadgetSystem(sys2) == formatGadgetSystem(sys));
  CHECK_THROWS(parseGadgetSystem("toggle g sideways\n"));

  const OrderedCertificate cert{{{0, Count(1) << 60}, {3, 1}}};
  CHECK(parseCertificate(formatCertificate(cert)) == cert);
}

TEST_CASE("reports") {
  const Instance inst = parseInstance("a -> b\nconfig init: a\nconfig target: b\n");
  CHECK(instanceDigest(inst).size() == 16);
  CHECK(instanceDigest(inst) == instanceDigest(parseInstance(formatInstance(inst))));
  CHECK(instanceDigest(inst) != instanceDigest(parseInstance("a -> b\nconfig init: a\nconfig target: a\n")));
  CHECK(digest("") == "cbf29ce484222325");
}

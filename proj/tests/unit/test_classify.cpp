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

#include "crnreach/classify.hpp"
#include "crnreach/text_format.hpp"
#include "support.hpp"

using namespace crnreach;
using crnreach::testing::readData;

TEST_CASE("feed-forward order") {
  CHECK(feedForwardOrder(parseCrn(readData("excrn_b.crn"))) == std::vector<RuleId>{0, 2, 1});
  CHECK_FALSE(feedForwardOrder(parseCrn(readData("excrn_a.crn"))).has_value());
  CHECK(feedForwardOrder(parseCrn("")) == std::vector<RuleId>{});
  // Self-loops through catalysts are not dependencies.
  CHECK(feedForwardOrder(parseCrn("a + c -> b + c")).has_value());
  const Crn b = parseCrn(readData("excrn_b.crn"));
  CHECK(isFeedForwardOrder(b, {0, 2, 1}));
  CHECK_FALSE(isFeedForwardOrder(b, {1, 0, 2}));
}

TEST_CASE("source and consuming degrees") {
  const auto a = sourceConsumingDegrees(parseCrn(readData("excrn_a.crn")));
  CHECK(a.maxSource == 2);
  CHECK(a.maxConsuming == 2);
  const auto e = sourceConsumingDegrees(parseCrn(readData("excrn_e.crn")));
  CHECK(e.maxSource == 1);
  CHECK(e.maxConsuming == 2);
  const Crn single = parseCrn("a -> b");
  const auto d = sourceConsumingDegrees(single);
  CHECK(d.perSpecies[single.speciesIndex("a")].source == 0);
  CHECK(d.perSpecies[single.speciesIndex("a")].consuming == 1);
  CHECK(d.perSpecies[single.speciesIndex("b")].source == 1);
  CHECK(d.perSpecies[single.speciesIndex("b")].consuming == 0);
}

TEST_CASE("monotonicity") {
  CHECK(monotonicity(parseCrn("a + b -> c + d\nc + d -> a + a")) == Monotonicity::Preserving);
  CHECK(monotonicity(parseCrn("a + b -> c\nc -> a + b")) == Monotonicity::Mixed);
  CHECK(monotonicity(parseCrn("a + b + c -> 0")) == Monotonicity::Decreasing);
  CHECK(monotonicity(parseCrn("a -> a + a")) == Monotonicity::Increasing);
  CHECK(monotonicity(parseCrn("a -> a + a\na -> b")) == Monotonicity::Mixed);
}

TEST_CASE("bipartite partition") {
  const Crn path = parseCrn("a + b -> 0\nb + c -> 0");
  const auto p = bipartitePartition(path);
  REQUIRE(p.has_value());
  std::vector<std::size_t> ac{path.speciesIndex("a"), path.speciesIndex("c")};
  std::vector<std::size_t> b{path.speciesIndex("b")};
  std::sort(ac.begin(), ac.end());
  const bool matches = (p->first == ac && p->second == b) || (p->first == b && p->second == ac);
  CHECK(matches);
  CHECK_FALSE(bipartitePartition(parseCrn("a + b -> 0\nb + c -> 0\na + c -> 0")).has_value());
  CHECK_FALSE(bipartitePartition(parseCrn("2a -> 0")).has_value());
}

TEST_CASE("leaf and root rules") {
  // Rule 2 (b + c -> c) also feeds rule 1 through its catalyst c, so only the
  // a + c -> d rule is a leaf.
  CHECK(leafRules(parseCrn(readData("excrn_b.crn"))) == std::set<RuleId>{1});
  CHECK(leafRules(parseCrn("a -> b\nb -> 0")) == std::set<RuleId>{1});
  CHECK(rootRules(parseCrn("a -> b\nb -> 0")) == std::set<RuleId>{0});
  CHECK(leafRules(parseCrn("a -> 0\nb -> 0")) == std::set<RuleId>{0, 1});
}

TEST_CASE("profiles of the example rule sets") {
  const auto d = classify(parseCrn(readData("excrn_d.crn")));
  CHECK_FALSE(d.isFeedForward());
  CHECK(d.maxSource == 1);
  CHECK(d.maxConsuming == 1);
  CHECK(d.hasAutogenesis);

  const auto c = classify(parseCrn(readData("excrn_c.crn")));
  CHECK(c.isFeedForward());
  CHECK(c.maxSource == 2);
  CHECK(c.maxConsuming == 2);
  CHECK_FALSE(c.hasVoid);

  const auto pp = classify(parseCrn("a + b -> c + d"));
  CHECK(pp.isPopulationProtocol);
  const auto uni = classify(parseCrn("a -> b\nb -> c"));
  CHECK(uni.allUnimolecular);
  const auto v2 = classify(parseCrn("a + b -> 0"));
  CHECK(v2.allVoid2);
  CHECK(v2.bipartition.has_value());
}

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

#include <algorithm>

#include "crnreach/classify.hpp"
#include "crnreach/random_instances.hpp"
#include "crnreach/search.hpp"
#include "crnreach/solvers.hpp"
#include "crnreach/text_format.hpp"
#include "support.hpp"

using namespace crnreach;

namespace {

Instance reachInstance(const std::string& rules, const std::string& init, const std::string& target,
                       const std::string& species = "") {
  std::string text = species.empty() ? "" : "species: " + species + "\n";
  text += rules + "\nconfig init: " + init + "\nconfig target: " + target + "\n";
  return parseInstance(text);
}

Instance produceInstance(const std::string& rules, const std::string& init, const std::string& what) {
  return parseInstance(rules + "\nconfig init: " + init + "\nproblem: produce " + what + "\n");
}

}  // namespace

TEST_CASE("rule reversal") {
  const Crn r = reverseCrn(parseCrn("a + b -> c"));
  CHECK(formatRule(r, r.rules()[0]) == "c -> a + b");
  const auto profile = classify(reverseCrn(parseCrn(crnreach::testing::readData("excrn_b.crn"))));
  CHECK(profile.hasAutogenesis);
  CHECK_FALSE(profile.hasVoid);
}

TEST_CASE("prune step") {
  const Crn crn = parseCrn("species: a c\na -> c");
  const auto p = pruneStep(crn.configuration({{"c", 4}}), crn.configuration({{"a", 4}}), crn.rules()[0]);
  REQUIRE(p.has_value());
  CHECK(p->x == 4);
  CHECK(p->prunedTarget == crn.configuration({{"a", 4}}));

  const auto zero = pruneStep(crn.configuration({{"a", 2}}), crn.configuration({{"a", 2}}), crn.rules()[0]);
  REQUIRE(zero.has_value());
  CHECK(zero->x == 0);
  CHECK(zero->prunedTarget == crn.configuration({{"a", 2}}));

  // The last application of 2a + b -> a + c needs two a; D has none left.
  const Crn partial = parseCrn("species: a b c\n2a + b -> a + c");
  CHECK_FALSE(pruneStep(partial.configuration({{"c", 1}}), partial.configuration({{"a", 1}, {"b", 1}}),
                        partial.rules()[0])
                  .has_value());
  CHECK_THROWS_AS(pruneStep(crn.zero(), crn.zero(), parseCrn("a -> 0").rules()[0]), PreconditionViolated);
}

TEST_CASE("feed-forward 1-source, no void") {
  CHECK(decideFF1SourceNoVoid(reachInstance("", "a", "a", "a")).verdict == Verdict::Reachable);
  const Instance inst = reachInstance("a -> c\nc + c -> d", "a + a + a + a", "d + d");
  const Decision d = decideFF1SourceNoVoid(inst);
  CHECK(d.verdict == Verdict::Reachable);
  REQUIRE(d.witnessApplications.has_value());
  CHECK(d.witnessApplications->at(0) == 4);
  CHECK(d.witnessApplications->at(1) == 2);
  REQUIRE(d.certificate.has_value());
  CHECK(verifyCertificate(inst, *d.certificate));
  CHECK(decideFF1SourceNoVoid(reachInstance("a -> c", "a + a + a", "c + c")).verdict == Verdict::Unreachable);
  CHECK_THROWS_AS(decideFF1SourceNoVoid(reachInstance("a -> 0", "a", "0")), PreconditionViolated);
}

TEST_CASE("feed-forward 1-consuming, no autogenesis") {
  CHECK(decideFF1ConsumingNoAutogenesis(reachInstance("c -> a + b", "c + c", "2a + 2b")).verdict ==
        Verdict::Reachable);
  CHECK(decideFF1ConsumingNoAutogenesis(reachInstance("c -> a + b", "c + c", "a + 2b")).verdict ==
        Verdict::Unreachable);
  CHECK(decideFF1ConsumingNoAutogenesis(reachInstance("", "a", "a", "a")).verdict == Verdict::Reachable);
}

TEST_CASE("feed-forward 1-source, 1-consuming") {
  const Decision gen = decideFF1Source1Consuming(reachInstance("0 -> a\na -> 0", "0", "5a"));
  CHECK(gen.verdict == Verdict::Reachable);
  const Instance plain = reachInstance("a + b -> c", "2a + 2b", "c + c");
  CHECK(decideFF1Source1Consuming(plain).verdict == decideFF1SourceNoVoid(plain).verdict);

  const Decision div = decideFF1Source1Consuming(reachInstance("a -> b\nb -> 0", "a", "0"));
  CHECK(div.verdict == Verdict::Reachable);
  CHECK(div.method == "fallback");
  CHECK(div.fallbackFrom == "ff-ss-sc");
  CHECK(div.divergences.size() == 1);
}

TEST_CASE("(2,0) matching") {
  const std::string triangle = "a + b -> 0\nb + c -> 0\na + c -> 0";
  CHECK(decideVoid2Matching(reachInstance(triangle, "a + b + c", "0")).verdict == Verdict::Unreachable);
  CHECK(decideVoid2Matching(reachInstance(triangle, "2a + 2b + 2c", "0")).verdict == Verdict::Reachable);
  CHECK(decideVoid2Matching(reachInstance("a + b -> 0", "3a + 3b", "0")).verdict == Verdict::Reachable);
  CHECK(decideVoid2Matching(reachInstance("2a -> 0", "4a", "0")).verdict == Verdict::Reachable);
  CHECK(decideVoid2Matching(reachInstance("2a -> 0", "3a", "0")).verdict == Verdict::Unreachable);
  CHECK(decideVoid2Matching(reachInstance("a + b -> 0", "a", "a + b")).verdict == Verdict::Unreachable);
  SolverOptions tiny;
  tiny.unaryCap = 4;
  CHECK_THROWS_AS(decideVoid2Matching(reachInstance(triangle, "2a + 2b + 2c", "0"), tiny), VolumeCapExceeded);
  CHECK_THROWS(decideVoid2Matching(reachInstance("a -> 0", "a", "0")));
}

TEST_CASE("(2,0) bipartite flow") {
  const Crn crn = parseCrn("a + b -> 0");
  const Count big = Count(1) << 40;
  const Instance large(crn, crn.configuration({{"a", big}, {"b", big}}), crn.zero());
  const Decision d = decideVoid2BipartiteFlow(large);
  CHECK(d.verdict == Verdict::Reachable);
  CHECK(d.witnessApplications->at(0) == big);
  CHECK(decideVoid2BipartiteFlow(reachInstance("a + b -> 0", "2a + b", "0")).verdict == Verdict::Unreachable);
  CHECK(decideVoid2BipartiteFlow(reachInstance("a + b -> 0", "2a + b", "2a + b")).verdict == Verdict::Reachable);
  CHECK_THROWS_AS(decideVoid2BipartiteFlow(reachInstance("2a -> 0", "2a", "0")), NotBipartite);
}

TEST_CASE("unimolecular reachability and production") {
  CHECK(decideUnimolecular(reachInstance("s -> t", "s", "t")).verdict == Verdict::Reachable);
  CHECK(decideUnimolecular(reachInstance("a -> b", "a + c", "b + c", "a b c")).verdict == Verdict::Reachable);
  CHECK(decideUnimolecular(reachInstance("a -> b", "b", "a")).verdict == Verdict::Unreachable);
  const Decision path = decideUnimolecular(reachInstance("a -> b\nb -> c\na -> d", "3a", "2c + d"));
  CHECK(path.verdict == Verdict::Reachable);
  CHECK(verifyCertificate(reachInstance("a -> b\nb -> c\na -> d", "3a", "2c + d"), *path.certificate));
  CHECK_THROWS_AS(decideUnimolecular(reachInstance("a + b -> c", "a + b", "c")), NotUnimolecular);

  CHECK(produceUnimolecular(produceInstance("a -> b\nb -> c", "2a", "c 2")).verdict == Verdict::Reachable);
  CHECK(produceUnimolecular(produceInstance("a -> b\nb -> c", "2a", "c 3")).verdict == Verdict::Unreachable);
  CHECK(produceUnimolecular(produceInstance("a -> b", "a", "a 1")).verdict == Verdict::Reachable);
  CHECK(produceUnimolecular(produceInstance("a -> b", "b", "a 1")).verdict == Verdict::Unreachable);
}

TEST_CASE("dispatch") {
  CHECK(dispatch(reachInstance(crnreach::testing::readData("excrn_e.crn"), "0", "0", "")).method == "oracle");
  CHECK(dispatch(reachInstance("a -> c\nc + c -> d", "4a", "2d")).method == "ff-ss-nv");
  CHECK(dispatch(reachInstance("c -> a + b\na -> 0", "c", "b")).method == "ff-sc-na");
  CHECK(dispatch(reachInstance("a -> b", "a", "b")).method == "unimolecular");
  // A single rule is trivially feed-forward and 1-consuming.
  CHECK(dispatch(reachInstance("a + b -> 0", "a + b", "0")).method == "ff-sc-na");
  CHECK(dispatch(reachInstance("a + b -> 0\nb + c -> 0", "a + b", "0")).method == "void2-bipartite-flow");
  CHECK(dispatch(reachInstance("a + b + c -> 0\na + d + e -> 0", "a + b + c", "0")).method == "oracle");
  CHECK(dispatch(produceInstance("a -> b", "a", "b 1")).method == "unimolecular-production");

  const std::string triangle = "a + b -> 0\nb + c -> 0\na + c -> 0";
  CHECK(dispatch(reachInstance(triangle, "2a + 2b + 2c", "0")).method == "void2-matching");
  SolverOptions tiny;
  tiny.unaryCap = 4;
  const Decision capped = dispatch(reachInstance(triangle, "2a + 2b + 2c", "0"), tiny);
  CHECK(capped.verdict == Verdict::Unknown);
  CHECK(capped.unknownReason.find("unary cap") != std::string::npos);

  const Decision forced = runMethod("ff-ss-nv", reachInstance("a -> 0", "a", "0"), {});
  CHECK(std::any_of(forced.warnings.begin(), forced.warnings.end(),
                    [](const std::string& w) { return w.rfind("precondition_violated", 0) == 0; }));
  CHECK_THROWS_AS(runMethod("nope", reachInstance("a -> 0", "a", "0"), {}), std::invalid_argument);
}

TEST_CASE("random suites agree with the oracle") {
  Rng rng(21);
  for (const auto& family : randomFamilies()) {
    for (int k = 0; k < 150; ++k) {
      const Instance inst = randomInstance(rng, family);
      const Decision d = dispatch(inst);
      const CrossCheck cc = crossCheck(inst, d, {});
      CHECK_MESSAGE(cc.agreement, family << ":\n" << formatInstance(inst));
      if (d.verdict == Verdict::Reachable && d.certificate) CHECK(verifyCertificate(inst, *d.certificate));
    }
  }
}

TEST_CASE("pruning witnesses replay onto the target") {
  Rng rng(22);
  for (int k = 0; k < 300; ++k) {
    const Instance inst = randomFF1SourceNoVoid(rng);
    const Decision d = decideFF1SourceNoVoid(inst);
    if (d.verdict != Verdict::Reachable) continue;
    // Reverse pruning order is a feed-forward order over the pruned rules.
    OrderedCertificate cert;
    const auto order = *feedForwardOrder(inst.crn());
    for (RuleId r : order) {
      const Count m = d.witnessApplications->count(r) ? d.witnessApplications->at(r) : Count(0);
      if (m > 0) cert.blocks.push_back({r, m});
    }
    CHECK(verifyCertificate(inst, cert));
  }
}

TEST_CASE("verdict does not depend on which leaf is pruned first") {
  Rng rng(23);
  int multiLeaf = 0;
  for (int k = 0; k < 300; ++k) {
    const Instance inst = randomFF1SourceNoVoid(rng);
    if (leafRules(inst.crn()).size() < 2) continue;
    ++multiLeaf;
    const auto first = pruneRecursively(inst, false).status;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      Rng pick(seed);
      const auto other =
          pruneRecursively(inst, false, [&](const std::vector<RuleId>& c) { return pick.below(c.size()); }).status;
      CHECK(other == first);
    }
  }
  CHECK(multiLeaf > 20);
}

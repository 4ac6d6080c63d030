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

#include "crnreach/crn.hpp"
#include "crnreach/text_format.hpp"

using namespace crnreach;

namespace {

const Rule& only(const Crn& crn) { return crn.rules()[0]; }

}  // namespace

TEST_CASE("volume sums entries exactly") {
  const Crn water = parseCrn("2H + O -> W");
  CHECK(volume(water.configuration({{"H", 2}, {"O", 1}})) == 3);
  CHECK(volume(water.zero()) == 0);
  const Count big = Count(1) << 40;
  CHECK(volume(parseCrn("a -> b").configuration({{"a", big}})) == big);
}

TEST_CASE("rule traits") {
  SUBCASE("void rule with catalyst") {
    const Crn crn = parseCrn("species: b c\nb + c -> c");
    const auto& t = only(crn).traits();
    CHECK(t.isVoid);
    CHECK_FALSE(t.isAutogenesis);
    CHECK(t.consumed == std::vector<std::size_t>{crn.speciesIndex("b")});
    CHECK(t.catalysts == std::vector<std::size_t>{crn.speciesIndex("c")});
    CHECK(t.size == RuleSize{2, 1});
  }
  SUBCASE("autogenesis with catalyst") {
    const Crn crn = parseCrn("species: d b\nd -> d + b");
    const auto& t = only(crn).traits();
    CHECK(t.isAutogenesis);
    CHECK_FALSE(t.isVoid);
    CHECK(t.produced == std::vector<std::size_t>{crn.speciesIndex("b")});
    CHECK(t.catalysts == std::vector<std::size_t>{crn.speciesIndex("d")});
  }
  SUBCASE("water") {
    const Crn crn = parseCrn("species: H O W\n2H + O -> W");
    const auto& t = only(crn).traits();
    CHECK(t.size == RuleSize{3, 1});
    CHECK(t.consumed == std::vector<std::size_t>{0, 1});
    CHECK(t.produced == std::vector<std::size_t>{2});
    CHECK(t.volumeDelta == -2);
  }
  SUBCASE("pure catalyst is neither source nor sink") {
    const auto& t = only(parseCrn("a -> a")).traits();
    CHECK(t.produced.empty());
    CHECK(t.consumed.empty());
  }
}

TEST_CASE("the empty rule is rejected") {
  CHECK_THROWS_AS(Rule(0, Configuration(1), Configuration(1)), InvalidCrn);
  CHECK_THROWS(parseCrn("0 -> 0"));
}

TEST_CASE("applicability and single application") {
  const Crn water = parseCrn("2H + O -> W");
  const Rule& r = only(water);
  CHECK(isApplicable(water.configuration({{"H", 2}, {"O", 1}}), r));
  CHECK_FALSE(isApplicable(water.configuration({{"H", 1}, {"O", 1}}), r));
  CHECK(applyOnce(water.configuration({{"H", 2}, {"O", 1}}), r) == water.configuration({{"W", 1}}));
  CHECK_THROWS_AS(applyOnce(water.configuration({{"H", 1}, {"O", 1}}), r), NotApplicable);

  const Crn ab = parseCrn("a + b -> c");
  CHECK(applyOnce(ab.configuration({{"a", 1}, {"b", 1}}), only(ab)) == ab.configuration({{"c", 1}}));

  const Crn id = parseCrn("a -> a");
  CHECK(applyOnce(id.configuration({{"a", 1}}), only(id)) == id.configuration({{"a", 1}}));

  const Crn gen = parseCrn("0 -> a");
  CHECK(isApplicable(gen.zero(), only(gen)));
}

TEST_CASE("block application") {
  const Crn conv = parseCrn("a -> b");
  CHECK(applyRun(conv.configuration({{"a", 5}}), only(conv), 5) == conv.configuration({{"b", 5}}));
  CHECK_THROWS_AS(applyRun(conv.configuration({{"a", 5}}), only(conv), 6), IllegalRun);

  const Crn partial = parseCrn("2a + b -> a + c");
  CHECK_THROWS_AS(applyRun(partial.configuration({{"a", 3}}), only(partial), 1), IllegalRun);

  const Crn dimer = parseCrn("c + c -> d");
  CHECK(applyRun(dimer.configuration({{"c", 4}}), only(dimer), 2) == dimer.configuration({{"d", 2}}));

  const Count big = Count(1) << 50;
  CHECK(applyRun(conv.configuration({{"a", big}}), only(conv), big) == conv.configuration({{"b", big}}));
  CHECK(applyRun(conv.configuration({{"a", 1}}), only(conv), 0) == conv.configuration({{"a", 1}}));
  CHECK_FALSE(tryApplyRun(conv.configuration({{"a", 1}}), only(conv), 2).has_value());
}

TEST_CASE("block legality is checked at the last application") {
  // a + x -> a + y keeps a; 2x with one a fires twice. b + x -> y with one b
  // fires once only.
  const Crn cat = parseCrn("species: a b x y\na + x -> a + y\nb + x -> y");
  const Configuration c = cat.configuration({{"a", 1}, {"b", 1}, {"x", 2}});
  CHECK(applyRun(c, cat.rules()[0], 2) == cat.configuration({{"a", 1}, {"b", 1}, {"y", 2}}));
  CHECK_FALSE(tryApplyRun(c, cat.rules()[1], 2).has_value());
}

TEST_CASE("builder and instances") {
  CrnBuilder b;
  b.addRule({{"a", 1}}, {{"b", 1}});
  b.species("z");
  const Crn crn = b.build();
  CHECK(crn.speciesCount() == 3);
  CHECK(crn.findSpecies("z").has_value());
  CHECK_FALSE(crn.findSpecies("q").has_value());
  CHECK(isValidSpeciesName("S^v"));
  CHECK_FALSE(isValidSpeciesName("1a"));

  CHECK_THROWS_AS(Instance(crn, Configuration(2), crn.zero()), InvalidCrn);
  CHECK_THROWS_AS(Instance(crn, crn.zero(), crn.zero(), Production{0, 0}), InvalidCrn);
  const Instance inst(crn, crn.zero(), crn.zero());
  CHECK(problemName(inst.problem()) == "reach");
  CHECK(problemName(inst.withProblem(UniversalReach{}).problem()) == "universal");
}

TEST_CASE("count parsing") {
  CHECK(parseCount("1099511627776") == (Count(1) << 40));
  CHECK(toString(Count(1) << 40) == "1099511627776");
  CHECK_THROWS_AS(parseCount("-3"), std::invalid_argument);
  CHECK_THROWS_AS(parseCount(""), std::invalid_argument);
}

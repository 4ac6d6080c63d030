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

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crnreach/crn.hpp"

namespace crnreach {

class NotVoid2System : public Error {
 public:
  using Error::Error;
};

enum class Monotonicity { Increasing, Decreasing, Preserving, Mixed };

std::string toString(Monotonicity m);

struct SpeciesDegree {
  std::size_t source = 0;     // rules that net-produce the species
  std::size_t consuming = 0;  // rules that net-consume the species
};

struct Degrees {
  std::vector<SpeciesDegree> perSpecies;
  std::size_t maxSource = 0;
  std::size_t maxConsuming = 0;
};

struct Bipartition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

struct ClassificationProfile {
  std::optional<std::vector<RuleId>> feedForwardOrder;
  std::size_t maxSource = 0;
  std::size_t maxConsuming = 0;
  bool hasVoid = false;
  bool hasAutogenesis = false;
  bool hasCatalyst = false;
  RuleSize ruleSizeBound;  // entrywise maxima over the rules
  Monotonicity monotonicity = Monotonicity::Preserving;
  bool isPopulationProtocol = false;
  bool allUnimolecular = false;  // every rule size (1,1)
  bool allVoid2 = false;         // every rule size (2,0)
  std::optional<Bipartition> bipartition;

  bool isFeedForward() const { return feedForwardOrder.has_value(); }
};

/// Topological order of the rule dependency graph (edge R->S when a species
/// occurring in R's products occurs in S's reactants, R != S). Ties are broken
/// by lowest rule id. Absent if the graph has a cycle.
std::optional<std::vector<RuleId>> feedForwardOrder(const Crn& crn);

/// Checks the feed-forward condition for a proposed order directly.
bool isFeedForwardOrder(const Crn& crn, const std::vector<RuleId>& order);

Degrees sourceConsumingDegrees(const Crn& crn);

Monotonicity monotonicity(const Crn& crn);

/// 2-colouring of the reactant-pair graph. Throws NotVoid2System unless every
/// rule has size (2,0).
std::optional<Bipartition> bipartitePartition(const Crn& crn);

/// Rules whose product species occur as reactants of no other rule.
std::set<RuleId> leafRules(const Crn& crn);

/// Rules whose reactant species occur as products of no other rule.
std::set<RuleId> rootRules(const Crn& crn);

bool hasRuleSize(const Rule& r, unsigned reactants, unsigned products);

ClassificationProfile classify(const Crn& crn);

}  // namespace crnreach

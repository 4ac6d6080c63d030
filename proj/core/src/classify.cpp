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

#include "crnreach/classify.hpp"

#include <algorithm>
#include <queue>

namespace crnreach {

std::string toString(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Preserving: return "preserving";
    case Monotonicity::Mixed: return "mixed";
  }
  return "mixed";
}

namespace {

// Occurrence-based dependency: some species with a non-zero product entry in
// `from` has a non-zero reactant entry in `to`.
bool feeds(const Rule& from, const Rule& to) {
  const auto& products = from.products();
  for (const auto& term : to.reactantTerms()) {
    if (products[term.species] != 0) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<RuleId>> feedForwardOrder(const Crn& crn) {
  const auto rules = crn.rules();
  const std::size_t n = rules.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && feeds(rules[a], rules[b])) {
        out[a].push_back(b);
        ++indegree[b];
      }
    }
  }
  using Entry = std::pair<RuleId, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t a = 0; a < n; ++a) {
    if (indegree[a] == 0) ready.emplace(rules[a].id(), a);
  }
  std::vector<RuleId> order;
  order.reserve(n);
  while (!ready.empty()) {
    auto [id, a] = ready.top();
    ready.pop();
    order.push_back(id);
    for (std::size_t b : out[a]) {
      if (--indegree[b] == 0) ready.emplace(rules[b].id(), b);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool isFeedForwardOrder(const Crn& crn, const std::vector<RuleId>& order) {
  if (order.size() != crn.ruleCount()) return false;
  std::vector<const Rule*> seq;
  std::set<RuleId> seen;
  for (RuleId id : order) {
    if (!crn.findRule(id) || !seen.insert(id).second) return false;
    seq.push_back(&crn.ruleById(id));
  }
  for (std::size_t later = 0; later < seq.size(); ++later) {
    for (std::size_t earlier = 0; earlier < later; ++earlier) {
      if (feeds(*seq[later], *seq[earlier])) return false;
    }
  }
  return true;
}

Degrees sourceConsumingDegrees(const Crn& crn) {
  Degrees d;
  d.perSpecies.resize(crn.speciesCount());
  for (const auto& r : crn.rules()) {
    for (std::size_t i : r.traits().produced) ++d.perSpecies[i].source;
    for (std::size_t i : r.traits().consumed) ++d.perSpecies[i].consuming;
  }
  for (const auto& s : d.perSpecies) {
    d.maxSource = std::max(d.maxSource, s.source);
    d.maxConsuming = std::max(d.maxConsuming, s.consuming);
  }
  return d;
}

Monotonicity monotonicity(const Crn& crn) {
  bool pos = false, neg = false, zero = false;
  for (const auto& r : crn.rules()) {
    const Count& delta = r.traits().volumeDelta;
    if (delta > 0) pos = true;
    else if (delta < 0) neg = true;
    else zero = true;
  }
  if (!pos && !neg) return Monotonicity::Preserving;
  if (pos && !neg && !zero) return Monotonicity::Increasing;
  if (neg && !pos && !zero) return Monotonicity::Decreasing;
  return Monotonicity::Mixed;
}

bool hasRuleSize(const Rule& r, unsigned reactants, unsigned products) {
  return r.traits().size.reactants == reactants && r.traits().size.products == products;
}

std::optional<Bipartition> bipartitePartition(const Crn& crn) {
  const std::size_t n = crn.speciesCount();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& r : crn.rules()) {
    if (!hasRuleSize(r, 2, 0)) {
      throw NotVoid2System("rule " + std::to_string(r.id()) + " is not of size (2,0)");
    }
    const auto terms = r.reactantTerms();
    if (terms.size() == 1) return std::nullopt;  // 2a -> 0 is a self-loop
    adj[terms[0].species].push_back(terms[1].species);
    adj[terms[1].species].push_back(terms[0].species);
  }
  std::vector<int> colour(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t w : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition part;
  for (std::size_t i = 0; i < n; ++i) (colour[i] == 0 ? part.first : part.second).push_back(i);
  return part;
}

std::set<RuleId> leafRules(const Crn& crn) {
  std::set<RuleId> leaves;
  const auto rules = crn.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    bool leaf = true;
    for (std::size_t b = 0; b < rules.size() && leaf; ++b) {
      if (a != b && feeds(rules[a], rules[b])) leaf = false;
    }
    if (leaf) leaves.insert(rules[a].id());
  }
  return leaves;
}

std::set<RuleId> rootRules(const Crn& crn) {
  std::set<RuleId> roots;
  const auto rules = crn.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    bool root = true;
    for (std::size_t b = 0; b < rules.size() && root; ++b) {
      if (a != b && feeds(rules[b], rules[a])) root = false;
    }
    if (root) roots.insert(rules[a].id());
  }
  return roots;
}

ClassificationProfile classify(const Crn& crn) {
  ClassificationProfile p;
  p.feedForwardOrder = feedForwardOrder(crn);
  const Degrees d = sourceConsumingDegrees(crn);
  p.maxSource = d.maxSource;
  p.maxConsuming = d.maxConsuming;
  p.monotonicity = monotonicity(crn);
  p.isPopulationProtocol = true;
  p.allUnimolecular = true;
  p.allVoid2 = true;
  p.ruleSizeBound = {0, 0};
  for (const auto& r : crn.rules()) {
    const auto& t = r.traits();
    p.hasVoid = p.hasVoid || t.isVoid;
    p.hasAutogenesis = p.hasAutogenesis || t.isAutogenesis;
    p.hasCatalyst = p.hasCatalyst || !t.catalysts.empty();
    p.ruleSizeBound.reactants = std::max(p.ruleSizeBound.reactants, t.size.reactants);
    p.ruleSizeBound.products = std::max(p.ruleSizeBound.products, t.size.products);
    p.isPopulationProtocol = p.isPopulationProtocol && hasRuleSize(r, 2, 2);
    p.allUnimolecular = p.allUnimolecular && hasRuleSize(r, 1, 1);
    p.allVoid2 = p.allVoid2 && hasRuleSize(r, 2, 0);
  }
  if (crn.ruleCount() == 0) {
    p.isPopulationProtocol = false;
    p.allVoid2 = false;
  }
  if (p.allVoid2) p.bipartition = bipartitePartition(crn);
  return p;
}

}  // namespace crnreach

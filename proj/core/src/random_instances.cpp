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

#include "crnreach/random_instances.hpp"

#include <set>
#include <stdexcept>

#include "crnreach/classify.hpp"
#include "crnreach/solvers.hpp"

namespace crnreach {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

Configuration randomConfiguration(Rng& rng, std::size_t species, std::size_t maxVolume) {
  Configuration c(species);
  if (species == 0) return c;
  const std::size_t vol = rng.between(0, maxVolume);
  for (std::size_t k = 0; k < vol; ++k) c.add(rng.below(species), 1);
  return c;
}

Configuration randomWalk(Rng& rng, const Crn& crn, Configuration start, std::size_t steps,
                         std::size_t maxVolume) {
  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<const Rule*> options;
    for (const auto& r : crn.rules()) {
      if (isApplicable(start, r) && volume(start) + r.traits().volumeDelta <= maxVolume) options.push_back(&r);
    }
    if (options.empty()) break;
    start = applyOnce(start, *options[rng.below(options.size())]);
  }
  return start;
}

namespace {

std::vector<std::string> speciesNames(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

Configuration randomMultiset(Rng& rng, std::size_t species, std::size_t vol) {
  Configuration c(species);
  for (std::size_t k = 0; k < vol; ++k) c.add(rng.below(species), 1);
  return c;
}

std::vector<Rule> randomRules(Rng& rng, std::size_t species, std::size_t count, std::size_t minIn,
                              std::size_t maxIn, std::size_t minOut, std::size_t maxOut) {
  std::vector<Rule> rules;
  while (rules.size() < count) {
    Configuration lhs = randomMultiset(rng, species, rng.between(minIn, maxIn));
    Configuration rhs = randomMultiset(rng, species, rng.between(minOut, maxOut));
    if (lhs == rhs) continue;
    rules.emplace_back(static_cast<RuleId>(rules.size()), std::move(lhs), std::move(rhs));
  }
  return rules;
}

Instance withTargets(Rng& rng, Crn crn, std::size_t maxVolume) {
  Configuration initial = randomConfiguration(rng, crn.speciesCount(), maxVolume);
  Configuration target = rng.chance(1, 2) ? randomWalk(rng, crn, initial, rng.between(0, 8), maxVolume)
                                          : randomConfiguration(rng, crn.speciesCount(), maxVolume);
  return Instance(std::move(crn), std::move(initial), std::move(target));
}

template <class Accept>
Crn sampleCrn(Rng& rng, std::size_t maxSpecies, std::size_t maxRules, std::size_t minIn, std::size_t maxIn,
              std::size_t minOut, std::size_t maxOut, Accept accept) {
  for (;;) {
    const std::size_t s = rng.between(2, maxSpecies);
    const std::size_t r = rng.between(1, maxRules);
    Crn crn(speciesNames(s), randomRules(rng, s, r, minIn, maxIn, minOut, maxOut));
    if (accept(crn, classify(crn))) return crn;
  }
}

}  // namespace

Instance randomFF1SourceNoVoid(Rng& rng, const RandomShape& shape) {
  Crn crn = sampleCrn(rng, shape.maxSpecies, shape.maxRules, 1, 2, 1, 2,
                      [&](const Crn&, const ClassificationProfile& p) {
                        // Autogenesis makes the state space unbounded; keep it rare.
                        if (p.hasAutogenesis && !rng.chance(1, 10)) return false;
                        return p.isFeedForward() && p.maxSource <= 1 && !p.hasVoid;
                      });
  return withTargets(rng, std::move(crn), shape.maxVolume);
}

Instance randomFF1ConsumingNoAutogenesis(Rng& rng, const RandomShape& shape) {
  const Instance forward = randomFF1SourceNoVoid(rng, shape);
  return Instance(reverseCrn(forward.crn()), forward.target(), forward.initial());
}

Instance randomFFNoAutogenesis(Rng& rng, const RandomShape& shape) {
  Crn crn = sampleCrn(rng, shape.maxSpecies, shape.maxRules, 1, 2, 0, 2,
                      [](const Crn&, const ClassificationProfile& p) {
                        return p.isFeedForward() && !p.hasAutogenesis;
                      });
  return withTargets(rng, std::move(crn), shape.maxVolume);
}

Instance randomVoid2(Rng& rng, const RandomShape& shape) {
  const std::size_t s = rng.between(2, shape.maxSpecies);
  const std::size_t count = rng.between(1, shape.maxRules);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Rule> rules;
  while (pairs.size() < count && pairs.size() < s * (s + 1) / 2) {
    std::size_t a = rng.below(s), b = rng.below(s);
    if (a > b) std::swap(a, b);
    if (!pairs.insert({a, b}).second) continue;
    Configuration lhs(s);
    lhs.add(a, 1);
    lhs.add(b, 1);
    rules.emplace_back(static_cast<RuleId>(rules.size()), std::move(lhs), Configuration(s));
  }
  Crn crn(speciesNames(s), std::move(rules));
  Configuration initial = randomConfiguration(rng, s, shape.maxVolume);
  Configuration target(s);
  if (rng.chance(1, 2)) {
    target = randomWalk(rng, crn, initial, rng.between(0, shape.maxVolume), shape.maxVolume);
  } else {
    for (std::size_t i = 0; i < s; ++i) {
      const auto top = static_cast<std::size_t>(initial[i]);
      target.set(i, rng.between(0, top));
    }
  }
  return Instance(std::move(crn), std::move(initial), std::move(target));
}

Crn randomBimolecular(Rng& rng, std::size_t maxSpecies, std::size_t maxRules) {
  const std::size_t s = rng.between(2, maxSpecies);
  return Crn(speciesNames(s), randomRules(rng, s, rng.between(1, maxRules), 2, 2, 2, 2));
}

Instance randomMonotone(Rng& rng, VolumeTrend trend, const RandomShape& shape) {
  const bool up = trend == VolumeTrend::Increasing;
  Crn crn = sampleCrn(rng, shape.maxSpecies, shape.maxRules, up ? 1 : 2, up ? 2 : 3, up ? 2 : 0, up ? 3 : 1,
                      [&](const Crn& c, const ClassificationProfile&) {
                        for (const auto& r : c.rules()) {
                          const auto& d = r.traits().volumeDelta;
                          if (up ? d <= 0 : d >= 0) return false;
                        }
                        return true;
                      });
  return withTargets(rng, std::move(crn), shape.maxVolume);
}

Digraph randomDigraph(Rng& rng, std::size_t vertices, std::uint64_t edgePercent) {
  Digraph g;
  for (std::size_t v = 0; v < vertices; ++v) g.vertices.push_back("v" + std::to_string(v));
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t w = 0; w < vertices; ++w) {
      if (u != w && rng.chance(edgePercent, 100)) g.edges.emplace_back(u, w);
    }
  }
  return g;
}

Hypergraph randomHypergraph(Rng& rng, std::size_t n, std::size_t edges) {
  Hypergraph h;
  h.xCount = h.yCount = h.zCount = n;
  std::set<std::array<std::size_t, 3>> seen;
  while (h.edges.size() < edges && seen.size() < n * n * n) {
    std::array<std::size_t, 3> e{rng.below(n), rng.below(n), rng.below(n)};
    if (seen.insert(e).second) h.edges.push_back(e);
  }
  return h;
}

std::vector<std::string> randomFamilies() {
  return {"ff-ss-nv", "ff-sc-na", "ff-na", "void2", "increasing", "decreasing"};
}

Instance randomInstance(Rng& rng, const std::string& family) {
  if (family == "ff-ss-nv") return randomFF1SourceNoVoid(rng);
  if (family == "ff-sc-na") return randomFF1ConsumingNoAutogenesis(rng);
  if (family == "ff-na") return randomFFNoAutogenesis(rng, {5, 5, 8});
  if (family == "void2") return randomVoid2(rng);
  if (family == "increasing") return randomMonotone(rng, VolumeTrend::Increasing);
  if (family == "decreasing") return randomMonotone(rng, VolumeTrend::Decreasing);
  throw std::invalid_argument("unknown random family '" + family + "'");
}

}  // namespace crnreach

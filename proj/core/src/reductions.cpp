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

#include "crnreach/reductions.hpp"

#include <cstdlib>
#include <set>

#include "crnreach/classify.hpp"

namespace crnreach {

std::size_t Digraph::vertexIndex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == name) return i;
  }
  throw InvalidCrn("unknown vertex '" + name + "'");
}

std::vector<std::string> Gadget::ports() const {
  if (kind == GadgetKind::ToggleLock) return {"a", "c", "b", "d"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rotatePorts; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

namespace {

using Multiset = CrnBuilder::Multiset;

Configuration configFrom(const Crn& crn, const std::map<std::string, Count>& counts) {
  Configuration c = crn.zero();
  for (const auto& [name, n] : counts) c.add(crn.speciesIndex(name), n);
  return c;
}

GeneratedInstance finish(const CrnBuilder& b, const std::map<std::string, Count>& initial,
                         const std::map<std::string, Count>& target,
                         std::map<std::string, std::string> annotations, Problem problem = Reach{}) {
  Crn crn = b.build();
  Configuration i = configFrom(crn, initial);
  Configuration d = configFrom(crn, target);
  return GeneratedInstance{Instance(std::move(crn), std::move(i), std::move(d), std::move(problem)),
                           std::move(annotations), {}};
}

}  // namespace

GeneratedInstance genHamPath(const Digraph& g, std::size_t s, std::size_t t, HamPathVariant variant) {
  const std::size_t n = g.vertices.size();
  if (s >= n || t >= n) throw InvalidCrn("source or target vertex out of range");
  if (s == t) throw InvalidCrn("source and target must differ");
  const bool keepVisited = variant == HamPathVariant::Size22;

  auto plain = [&](std::size_t v) { return g.vertices[v]; };
  auto visited = [&](std::size_t v) { return g.vertices[v] + "^v"; };
  auto signal = [&](std::size_t v, std::size_t i) { return g.vertices[v] + "*" + std::to_string(i); };

  CrnBuilder b;
  std::map<std::string, std::string> notes;
  for (std::size_t v = 0; v < n; ++v) {
    b.species(plain(v));
    notes[plain(v)] = "vertex " + g.vertices[v] + " not yet visited";
    if (keepVisited) {
      b.species(visited(v));
      notes[visited(v)] = "vertex " + g.vertices[v] + " visited";
    }
    for (std::size_t i = 0; i < n; ++i) {
      b.species(signal(v, i));
      notes[signal(v, i)] = "signal at " + g.vertices[v] + " after " + std::to_string(i) + " steps";
    }
  }
  for (const auto& [u, w] : g.edges) {
    if (u == w) continue;
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      Multiset lhs{{signal(u, i), 1}, {plain(w), 1}};
      Multiset rhs{{signal(w, i + 1), 1}};
      if (keepVisited) rhs.insert(rhs.begin(), {visited(u), 1});
      if (variant == HamPathVariant::Size12) {
        b.addRule(rhs, lhs);
      } else {
        b.addRule(lhs, rhs);
      }
    }
  }
  std::map<std::string, Count> start{{signal(s, 0), 1}};
  for (std::size_t v = 0; v < n; ++v) {
    if (v != s) start[plain(v)] = 1;
  }
  std::map<std::string, Count> end{{signal(t, n - 1), 1}};
  if (keepVisited) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v != t) end[visited(v)] = 1;
    }
  }
  GeneratedInstance out = variant == HamPathVariant::Size12 ? finish(b, end, start, std::move(notes))
                                                            : finish(b, start, end, std::move(notes));

  std::vector<std::size_t> in(n, 0), outDeg(n, 0);
  for (const auto& [u, w] : g.edges) {
    if (u == w) continue;
    ++outDeg[u];
    ++in[w];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v] > 2 || outDeg[v] > 2) {
      out.warnings.push_back("vertex " + g.vertices[v] +
                             " has in- or out-degree above 2; the generated CRN is not 2-source/2-consuming");
      break;
    }
  }
  return out;
}

namespace {

void requireBalanced(const Hypergraph& h) {
  if (h.xCount != h.yCount || h.yCount != h.zCount) {
    throw UnbalancedPartitions("partitions have sizes " + std::to_string(h.xCount) + ", " +
                               std::to_string(h.yCount) + ", " + std::to_string(h.zCount));
  }
  for (const auto& e : h.edges) {
    if (e[0] >= h.xCount || e[1] >= h.yCount || e[2] >= h.zCount) {
      throw InvalidCrn("hyperedge refers to a missing vertex");
    }
  }
}

std::array<std::string, 3> vertexNames(const std::array<std::size_t, 3>& e) {
  return {"x" + std::to_string(e[0] + 1), "y" + std::to_string(e[1] + 1), "z" + std::to_string(e[2] + 1)};
}

CrnBuilder matchingSpecies(const Hypergraph& h, std::map<std::string, Count>& initial,
                           std::map<std::string, std::string>& notes) {
  CrnBuilder b;
  for (const char part : {'x', 'y', 'z'}) {
    for (std::size_t i = 1; i <= h.xCount; ++i) {
      const std::string name = std::string(1, part) + std::to_string(i);
      b.species(name);
      initial[name] = 1;
      notes[name] = "vertex " + name + " uncovered";
    }
  }
  return b;
}

}  // namespace

GeneratedInstance gen3DM(const Hypergraph& h) {
  requireBalanced(h);
  std::map<std::string, Count> initial;
  std::map<std::string, std::string> notes;
  CrnBuilder b = matchingSpecies(h, initial, notes);
  for (const auto& e : h.edges) {
    const auto names = vertexNames(e);
    b.addRule({{names[0], 1}, {names[1], 1}, {names[2], 1}}, {});
  }
  return finish(b, initial, {}, std::move(notes));
}

GeneratedInstance gen3DMSpecies(const Hypergraph& h) {
  requireBalanced(h);
  std::map<std::string, Count> initial;
  std::map<std::string, std::string> notes;
  CrnBuilder b = matchingSpecies(h, initial, notes);
  b.species("a");
  notes["a"] = "count of chosen hyperedges";
  for (const auto& e : h.edges) {
    const auto names = vertexNames(e);
    b.addRule({{names[0], 1}, {names[1], 1}, {names[2], 1}}, {{"a", 1}});
  }
  return finish(b, initial, {{"a", h.xCount}}, std::move(notes));
}

GeneratedInstance genDigraphPath(const Digraph& g, std::size_t s, std::size_t t) {
  if (s >= g.vertices.size() || t >= g.vertices.size()) {
    throw InvalidCrn("source or target vertex out of range");
  }
  CrnBuilder b;
  std::map<std::string, std::string> notes;
  for (const auto& v : g.vertices) {
    b.species(v);
    notes[v] = "token at vertex " + v;
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges) {
    if (e.first == e.second || !seen.insert(e).second) continue;
    b.addRule({{g.vertices[e.first], 1}}, {{g.vertices[e.second], 1}});
  }
  return finish(b, {{g.vertices[s], 1}}, {{g.vertices[t], 1}}, std::move(notes));
}

GeneratedInstance genSatProduction(const Cnf& formula) {
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const auto& clause = formula.clauses[j];
    if (clause.size() != 3) {
      throw MalformedClause("clause " + std::to_string(j + 1) + " has " + std::to_string(clause.size()) +
                            " literals, expected 3");
    }
    for (int lit : clause) {
      const auto var = static_cast<std::size_t>(lit < 0 ? -static_cast<long>(lit) : lit);
      if (lit == 0 || var > formula.variables) {
        throw MalformedClause("clause " + std::to_string(j + 1) + " has invalid literal " + std::to_string(lit));
      }
    }
  }
  CrnBuilder b;
  std::map<std::string, Count> initial;
  std::map<std::string, std::string> notes;
  b.species("T");
  b.species("F");
  initial["T"] = 1;
  initial["F"] = 1;
  notes["T"] = "catalyst for assigning true";
  notes["F"] = "catalyst for assigning false";
  auto var = [](std::size_t i) { return "x" + std::to_string(i); };
  for (std::size_t i = 1; i <= formula.variables; ++i) {
    const std::string x = var(i);
    initial[x] = 1;
    initial[x + "^bar"] = 1;
    notes[x] = "variable " + x + " unassigned";
    notes[x + "^bar"] = "variable " + x + " unassigned (complement)";
    notes[x + "^T"] = "variable " + x + " assigned true";
    notes[x + "^F"] = "variable " + x + " assigned false";
    b.addRule({{"T", 1}, {x, 1}, {x + "^bar", 1}}, {{"T", 1}, {x + "^bar", 1}, {x + "^T", 1}});
    b.addRule({{"F", 1}, {x, 1}, {x + "^bar", 1}}, {{"F", 1}, {x, 1}, {x + "^F", 1}});
  }
  const std::size_t m = formula.clauses.size();
  for (std::size_t j = 0; j < m; ++j) {
    const std::string c = "c" + std::to_string(j);
    notes[c + "^SAT"] = "clause " + std::to_string(j) + " satisfied";
    for (std::size_t slot = 0; slot < 3; ++slot) {
      const int lit = formula.clauses[j][slot];
      const std::string literal = c + "^" + std::to_string(slot);
      const std::string witness = var(static_cast<std::size_t>(std::abs(lit))) + (lit > 0 ? "^T" : "^F");
      initial[literal] = 1;
      notes[literal] = "literal slot " + std::to_string(slot) + " of clause " + std::to_string(j);
      b.addRule({{literal, 1}, {witness, 1}}, {{c + "^SAT", 1}, {witness, 1}});
    }
  }
  for (std::size_t j = 0; j <= m; ++j) notes["SAT_" + std::to_string(j)] = "first " + std::to_string(j) + " clauses verified";
  b.species("SAT_0");
  initial["SAT_0"] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    b.addRule({{"SAT_" + std::to_string(j), 1}, {"c" + std::to_string(j) + "^SAT", 1}},
              {{"SAT_" + std::to_string(j + 1), 1}});
  }
  // Species that only occur in unused rules still need declaring.
  for (std::size_t i = 1; i <= formula.variables; ++i) {
    b.species(var(i) + "^T");
    b.species(var(i) + "^F");
  }
  Crn crn = b.build();
  const std::size_t goal = crn.speciesIndex("SAT_" + std::to_string(m));
  Configuration i = configFrom(crn, initial);
  Configuration d = crn.zero();
  return GeneratedInstance{Instance(std::move(crn), std::move(i), std::move(d), Production{goal, 1}),
                           std::move(notes), {}};
}

void validateGadgetSystem(const GadgetSystem& sys) {
  std::map<std::string, const Gadget*> byName;
  for (const auto& g : sys.gadgets) {
    if (!byName.emplace(g.name, &g).second) throw InvalidWiring("duplicate gadget '" + g.name + "'");
    if (g.kind == GadgetKind::Rotate && g.rotatePorts < 2) {
      throw InvalidWiring("rotate gadget '" + g.name + "' needs at least 2 ports");
    }
  }
  std::map<std::pair<std::string, std::string>, int> uses;
  for (const auto& g : sys.gadgets) {
    for (const auto& p : g.ports()) uses[{g.name, p}] = 0;
  }
  std::set<std::string> wireNames;
  for (const auto& w : sys.wires) {
    if (!wireNames.insert(w.name).second) throw InvalidWiring("duplicate wire '" + w.name + "'");
    if (w.endpointA == w.endpointB) throw InvalidWiring("wire '" + w.name + "' connects a port to itself");
    for (const PortRef* end : {&w.endpointA, &w.endpointB}) {
      auto it = uses.find({end->gadget, end->port});
      if (it == uses.end()) {
        throw InvalidWiring("wire '" + w.name + "' refers to unknown port " + end->gadget + "." + end->port);
      }
      ++it->second;
    }
  }
  for (const auto& [port, n] : uses) {
    if (n != 1) {
      throw InvalidWiring("port " + port.first + "." + port.second + " is attached to " + std::to_string(n) +
                          " wire endpoints");
    }
  }
  if (!wireNames.count(sys.startWire)) throw InvalidWiring("unknown start wire '" + sys.startWire + "'");
  if (!wireNames.count(sys.targetWire)) throw InvalidWiring("unknown target wire '" + sys.targetWire + "'");
}

namespace {

// Agent species arriving at / leaving from each port.
struct PortAgents {
  std::string incoming;
  std::string outgoing;
};

}  // namespace

GeneratedInstance genGadgetCrn(const GadgetSystem& sys, GadgetMode mode, bool split) {
  validateGadgetSystem(sys);
  const bool reach = mode == GadgetMode::Reachability;
  CrnBuilder b;
  std::map<std::string, std::string> notes;
  std::map<std::pair<std::string, std::string>, PortAgents> at;
  for (const auto& w : sys.wires) {
    const std::string fwd = w.name + "^fwd";
    const std::string bwd = w.name + "^bwd";
    b.species(fwd);
    b.species(bwd);
    notes[fwd] = "agent on wire " + w.name + " heading to " + w.endpointB.gadget + "." + w.endpointB.port;
    notes[bwd] = "agent on wire " + w.name + " heading to " + w.endpointA.gadget + "." + w.endpointA.port;
    at[{w.endpointB.gadget, w.endpointB.port}] = {fwd, bwd};
    at[{w.endpointA.gadget, w.endpointA.port}] = {bwd, fwd};
  }
  const std::string cw = "r^cw";
  const std::string ccw = "r^ccw";
  b.species(cw);
  notes[cw] = "rotate catalyst, clockwise";
  if (reach) {
    b.species(ccw);
    notes[ccw] = "rotate catalyst, counterclockwise";
  }

  std::map<std::string, Count> initial;
  initial[cw] = 1;
  for (const auto& g : sys.gadgets) {
    auto in = [&](const std::string& p) { return at.at({g.name, p}).incoming; };
    auto out = [&](const std::string& p) { return at.at({g.name, p}).outgoing; };
    if (g.kind == GadgetKind::ToggleLock) {
      const std::string open = g.name + "^G";
      const std::string shut = g.name + "^G'";
      b.species(open);
      b.species(shut);
      notes[open] = "gate " + g.name + " unlocked";
      notes[shut] = "gate " + g.name + " locked";
      initial[g.locked ? shut : open] = 1;
      b.addRule({{in("a"), 1}, {open, 1}}, {{out("c"), 1}, {shut, 1}});
      b.addRule({{in("c"), 1}, {shut, 1}}, {{out("a"), 1}, {open, 1}});
      b.addRule({{in("b"), 1}, {open, 1}}, {{out("d"), 1}, {open, 1}});
      b.addRule({{in("d"), 1}, {open, 1}}, {{out("b"), 1}, {open, 1}});
      // Blocked traversals send the agent back without touching the gate.
      b.addRule({{in("a"), 1}, {shut, 1}}, {{out("a"), 1}, {shut, 1}});
      b.addRule({{in("c"), 1}, {open, 1}}, {{out("c"), 1}, {open, 1}});
      b.addRule({{in("b"), 1}, {shut, 1}}, {{out("b"), 1}, {shut, 1}});
      b.addRule({{in("d"), 1}, {shut, 1}}, {{out("d"), 1}, {shut, 1}});
    } else {
      const auto ports = g.ports();
      const std::size_t k = ports.size();
      for (std::size_t i = 0; i < k; ++i) {
        b.addRule({{in(ports[i]), 1}, {cw, 1}}, {{out(ports[(i + 1) % k]), 1}, {cw, 1}});
      }
      if (reach) {
        for (std::size_t i = 0; i < k; ++i) {
          b.addRule({{in(ports[i]), 1}, {ccw, 1}}, {{out(ports[(i + k - 1) % k]), 1}, {ccw, 1}});
        }
      }
    }
  }
  const std::string startAgent = sys.startWire + (sys.startForward ? "^fwd" : "^bwd");
  const std::string goalAgent = sys.targetWire + "^fwd";
  initial[startAgent] = 1;
  std::map<std::string, Count> target;
  if (reach) {
    b.addRule({{goalAgent, 1}, {cw, 1}}, {{sys.targetWire + "^bwd", 1}, {ccw, 1}});
    target = initial;
    target.erase(startAgent);
    target.erase(cw);
    target[sys.startWire + (sys.startForward ? "^bwd" : "^fwd")] = 1;
    target[ccw] = 1;
  }

  GeneratedInstance gen = [&] {
    if (reach) return finish(b, initial, target, notes);
    Crn crn = b.build();
    const std::size_t goal = crn.speciesIndex(goalAgent);
    Configuration i = configFrom(crn, initial);
    Configuration d = crn.zero();
    return GeneratedInstance{Instance(std::move(crn), std::move(i), std::move(d), Production{goal, 1}),
                             notes, {}};
  }();
  gen.warnings.push_back("blocked traversals use deterministic state-preserving bounce rules");
  if (!split) return gen;

  const Instance& inst = gen.instance;
  Crn splitCrn = splitNonMonotone(inst.crn());
  for (std::size_t s = inst.crn().speciesCount(); s < splitCrn.speciesCount(); ++s) {
    gen.annotations[splitCrn.speciesName(s)] = "agent intermediate";
  }
  const std::size_t n = splitCrn.speciesCount();
  gen.instance = Instance(std::move(splitCrn), padConfiguration(inst.initial(), n),
                          padConfiguration(inst.target(), n), inst.problem());
  return gen;
}

Configuration padConfiguration(const Configuration& c, std::size_t species) {
  std::vector<Count> counts(c.counts().begin(), c.counts().end());
  counts.resize(species);
  return Configuration(std::move(counts));
}

Crn splitNonMonotone(const Crn& crn) {
  for (const auto& r : crn.rules()) {
    if (!hasRuleSize(r, 2, 2)) {
      throw NotBimolecular("rule " + std::to_string(r.id()) + " is not of size (2,2)");
    }
  }
  std::vector<std::string> names(crn.speciesNames().begin(), crn.speciesNames().end());
  std::set<std::string> taken(names.begin(), names.end());
  std::vector<std::size_t> intermediate;
  for (std::size_t k = 0; k < crn.ruleCount(); ++k) {
    std::string name = "m_" + std::to_string(k + 1);
    while (taken.count(name)) name += "'";
    taken.insert(name);
    intermediate.push_back(names.size());
    names.push_back(std::move(name));
  }
  const std::size_t n = names.size();
  std::vector<Rule> rules;
  RuleId next = 0;
  for (std::size_t k = 0; k < crn.ruleCount(); ++k) {
    const Rule& r = crn.rules()[k];
    Configuration mid(n);
    mid.set(intermediate[k], 1);
    rules.emplace_back(next++, padConfiguration(r.reactants(), n), mid);
    rules.emplace_back(next++, mid, padConfiguration(r.products(), n));
  }
  return Crn(std::move(names), std::move(rules));
}

}  // namespace crnreach

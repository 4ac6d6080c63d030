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

// Independent reference answers for the generated instances. None of these
// helpers touch the library's search or solver code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "crnreach/crn.hpp"
#include "crnreach/reductions.hpp"

namespace crnreach::testing {

inline std::string dataPath(const std::string& name) { return std::string(CRNREACH_TEST_DATA) + "/" + name; }

inline std::string readData(const std::string& name) {
  std::ifstream in(dataPath(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Hamiltonian s-t path by trying every vertex order.
inline bool hasHamiltonianPath(const Digraph& g, std::size_t s, std::size_t t) {
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, w] : g.edges) adj[u][w] = 1;
  std::vector<std::size_t> middle;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != s && v != t) middle.push_back(v);
  }
  do {
    std::size_t prev = s;
    bool ok = true;
    for (std::size_t v : middle) {
      if (!adj[prev][v]) {
        ok = false;
        break;
      }
      prev = v;
    }
    if (ok && adj[prev][t]) return true;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return false;
}

/// Perfect 3-dimensional matching by backtracking over the x vertices.
inline bool hasPerfectMatching(const Hypergraph& h) {
  const std::size_t n = h.xCount;
  std::vector<char> usedY(n, 0), usedZ(n, 0);
  auto go = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) return true;
    for (const auto& e : h.edges) {
      if (e[0] != x || usedY[e[1]] || usedZ[e[2]]) continue;
      usedY[e[1]] = usedZ[e[2]] = 1;
      if (self(self, x + 1)) return true;
      usedY[e[1]] = usedZ[e[2]] = 0;
    }
    return false;
  };
  return go(go, 0);
}

inline bool satisfiable(const Cnf& f) {
  for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << f.variables); ++assignment) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (int lit : clause) {
        const bool value = (assignment >> (std::abs(lit) - 1)) & 1;
        any |= lit > 0 ? value : !value;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline bool connected(const Digraph& g, std::size_t s, std::size_t t) {
  std::vector<char> seen(g.vertices.size(), 0);
  std::vector<std::size_t> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (v == t) return true;
    for (const auto& [a, b] : g.edges) {
      if (a == v && !seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  return false;
}

using Counts = std::vector<long long>;

inline Counts toCounts(const Configuration& c) {
  Counts out;
  for (const auto& x : c.counts()) out.push_back(static_cast<long long>(x));
  return out;
}

/// Plain breadth-first search over small configurations; nullopt when the
/// volume bound cut the search before the target was found.
inline std::optional<bool> naiveReach(const Crn& crn, const Configuration& from, const Configuration& to,
                                      long long volumeBound = 40) {
  std::vector<std::pair<Counts, Counts>> rules;
  for (const auto& r : crn.rules()) rules.emplace_back(toCounts(r.reactants()), toCounts(r.products()));
  const Counts start = toCounts(from), goal = toCounts(to);
  std::set<Counts> seen{start};
  std::queue<Counts> q;
  q.push(start);
  bool truncated = false;
  while (!q.empty()) {
    Counts c = q.front();
    q.pop();
    if (c == goal) return true;
    for (const auto& [lhs, rhs] : rules) {
      bool ok = true;
      for (std::size_t i = 0; i < c.size(); ++i) ok &= c[i] >= lhs[i];
      if (!ok) continue;
      Counts next = c;
      for (std::size_t i = 0; i < c.size(); ++i) next[i] += rhs[i] - lhs[i];
      if (std::accumulate(next.begin(), next.end(), 0LL) > volumeBound) {
        truncated = true;
        continue;
      }
      if (seen.insert(next).second) q.push(next);
    }
  }
  if (truncated) return std::nullopt;
  return false;
}

/// Direct simulation of the deterministic agent moving through a gadget
/// system. True when the agent ever travels forward along the target wire.
inline bool simulateGadgets(const GadgetSystem& sys) {
  std::map<std::string, const Gadget*> gadget;
  std::map<std::string, bool> locked;
  for (const auto& g : sys.gadgets) {
    gadget[g.name] = &g;
    locked[g.name] = g.locked;
  }
  auto wireIndex = [&](const std::string& name) {
    for (std::size_t w = 0; w < sys.wires.size(); ++w) {
      if (sys.wires[w].name == name) return w;
    }
    throw std::runtime_error("no wire " + name);
  };
  // Leaving through a port: the wire attached there, moving away from it.
  auto leave = [&](const std::string& g, const std::string& port) {
    for (std::size_t w = 0; w < sys.wires.size(); ++w) {
      if (sys.wires[w].endpointA == PortRef{g, port}) return std::make_pair(w, true);
      if (sys.wires[w].endpointB == PortRef{g, port}) return std::make_pair(w, false);
    }
    throw std::runtime_error("dangling port");
  };
  std::size_t wire = wireIndex(sys.startWire);
  bool forward = sys.startForward;
  const std::size_t target = wireIndex(sys.targetWire);
  std::set<std::tuple<std::size_t, bool, std::map<std::string, bool>>> seen;
  for (;;) {
    if (wire == target && forward) return true;
    if (!seen.insert({wire, forward, locked}).second) return false;
    const PortRef at = forward ? sys.wires[wire].endpointB : sys.wires[wire].endpointA;
    const Gadget& g = *gadget.at(at.gadget);
    std::string exit = at.port;
    if (g.kind == GadgetKind::Rotate) {
      const std::size_t i = std::stoul(at.port.substr(1));
      exit = "p" + std::to_string((i + 1) % g.rotatePorts);
    } else {
      bool& l = locked[g.name];
      if (at.port == "a" && !l) {
        exit = "c";
        l = true;
      } else if (at.port == "c" && l) {
        exit = "a";
        l = false;
      } else if (at.port == "b" && !l) {
        exit = "d";
      } else if (at.port == "d" && !l) {
        exit = "b";
      }
    }
    std::tie(wire, forward) = leave(g.name, exit);
  }
}

}  // namespace crnreach::testing

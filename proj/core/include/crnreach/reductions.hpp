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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crnreach/crn.hpp"

namespace crnreach {

class UnbalancedPartitions : public Error {
 public:
  using Error::Error;
};

class MalformedClause : public Error {
 public:
  using Error::Error;
};

class InvalidWiring : public Error {
 public:
  using Error::Error;
};

class NotBimolecular : public Error {
 public:
  using Error::Error;
};

struct Digraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> source;
  std::optional<std::size_t> target;

  std::size_t vertexIndex(const std::string& name) const;
};

/// Tripartite 3-uniform hypergraph; edges hold 0-based (x, y, z) indices.
struct Hypergraph {
  std::size_t xCount = 0;
  std::size_t yCount = 0;
  std::size_t zCount = 0;
  std::vector<std::array<std::size_t, 3>> edges;
};

/// CNF over variables 1..variables; literals are DIMACS-style signed ints.
struct Cnf {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;
};

enum class GadgetKind { ToggleLock, Rotate };

struct Gadget {
  std::string name;
  GadgetKind kind = GadgetKind::ToggleLock;
  bool locked = false;        // toggle-lock only
  std::size_t rotatePorts = 0;  // rotate only

  /// Port names: a, c, b, d for toggle-locks, p0..p{k-1} for rotates.
  std::vector<std::string> ports() const;
};

struct PortRef {
  std::string gadget;
  std::string port;

  friend bool operator==(const PortRef&, const PortRef&) = default;
};

/// The agent species `<wire>^fwd` travels from endpointA to endpointB.
struct Wire {
  std::string name;
  PortRef endpointA;
  PortRef endpointB;
};

struct GadgetSystem {
  std::vector<Gadget> gadgets;
  std::vector<Wire> wires;
  std::string startWire;
  bool startForward = true;
  std::string targetWire;
};

/// Throws InvalidWiring unless every port is attached to exactly one wire
/// endpoint and the start and target wires exist.
void validateGadgetSystem(const GadgetSystem& sys);

struct GeneratedInstance {
  Instance instance;
  /// Role of every species.
  std::map<std::string, std::string> annotations;
  std::vector<std::string> warnings;
};

enum class HamPathVariant { Size22, Size21, Size12 };

GeneratedInstance genHamPath(const Digraph& g, std::size_t s, std::size_t t, HamPathVariant variant);
GeneratedInstance gen3DM(const Hypergraph& h);
GeneratedInstance gen3DMSpecies(const Hypergraph& h);
GeneratedInstance genDigraphPath(const Digraph& g, std::size_t s, std::size_t t);
GeneratedInstance genSatProduction(const Cnf& formula);

enum class GadgetMode { Production, Reachability };

GeneratedInstance genGadgetCrn(const GadgetSystem& sys, GadgetMode mode, bool split);

/// Replaces each size-(2,2) rule X+Y -> Z+W by X+Y -> m and m -> Z+W with a
/// fresh intermediate m. Original species keep their indices; intermediates
/// are appended. Throws NotBimolecular for rules of any other size.
Crn splitNonMonotone(const Crn& crn);

/// Pads a configuration with zero counts for appended species.
Configuration padConfiguration(const Configuration& c, std::size_t species);

}  // namespace crnreach

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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crnreach/crn.hpp"
#include "crnreach/reductions.hpp"

namespace crnreach {

/// Seeded generator whose draws are identical on every platform
/// (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

 private:
  std::mt19937_64 engine_;
};

struct RandomShape {
  std::size_t maxSpecies = 6;
  std::size_t maxRules = 5;
  /// Bound on the volume of I and D.
  std::size_t maxVolume = 10;
};

/// Random configuration with total volume in [0, maxVolume].
Configuration randomConfiguration(Rng& rng, std::size_t species, std::size_t maxVolume);

/// Applies up to `steps` uniformly chosen applicable rules, never exceeding
/// `maxVolume`.
Configuration randomWalk(Rng& rng, const Crn& crn, Configuration start, std::size_t steps,
                         std::size_t maxVolume);

/// Feed-forward, 1-source, no void rules. Half of the targets are random-walk
/// endpoints (reachable), half are independent random configurations.
Instance randomFF1SourceNoVoid(Rng& rng, const RandomShape& shape = {});

/// Reversal of randomFF1SourceNoVoid: feed-forward, 1-consuming, no
/// autogenesis.
Instance randomFF1ConsumingNoAutogenesis(Rng& rng, const RandomShape& shape = {});

/// Feed-forward without autogenesis rules.
Instance randomFFNoAutogenesis(Rng& rng, const RandomShape& shape = {});

/// All rules of size (2,0).
Instance randomVoid2(Rng& rng, const RandomShape& shape = {5, 6, 12});

/// All rules of size (2,2).
Crn randomBimolecular(Rng& rng, std::size_t maxSpecies = 5, std::size_t maxRules = 5);

enum class VolumeTrend { Increasing, Decreasing };

/// Every rule strictly changes volume in the given direction.
Instance randomMonotone(Rng& rng, VolumeTrend trend, const RandomShape& shape = {5, 4, 8});

Digraph randomDigraph(Rng& rng, std::size_t vertices, std::uint64_t edgePercent);

Hypergraph randomHypergraph(Rng& rng, std::size_t n, std::size_t edges);

/// Names of the families understood by randomInstance.
std::vector<std::string> randomFamilies();
Instance randomInstance(Rng& rng, const std::string& family);

}  // namespace crnreach

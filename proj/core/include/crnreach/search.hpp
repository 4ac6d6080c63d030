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
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crnreach/crn.hpp"

namespace crnreach {

enum class Verdict { Reachable, Unreachable, Unknown };

std::string toString(Verdict v);

enum class Bound { StateCap, VolumeCap, StepCap };

std::string toString(Bound b);

struct OracleLimits {
  std::size_t stateCap = 1'000'000;
  Count volumeCap = 64;
  std::optional<std::size_t> stepCap;  // BFS depth; unbounded when absent
};

struct OracleOutcome {
  Verdict verdict = Verdict::Unknown;
  std::size_t statesExplored = 0;
  std::optional<Bound> boundHit;
  std::optional<std::vector<RuleId>> trace;
};

/// Breadth-first closure of one configuration under single rule applications.
///
/// Configurations are stored packed as machine words (every stored count is
/// bounded by the volume cap) in a hash-consed arena; lookups compare full
/// vectors on hash hits.
class ReachableSet {
 public:
  std::size_t size() const { return parent_.size(); }
  Configuration configuration(std::size_t state) const;
  std::optional<std::size_t> find(const Configuration& c) const;

  /// Rule ids leading from the initial configuration to `state`.
  std::vector<RuleId> traceTo(std::size_t state) const;
  std::size_t depth(std::size_t state) const { return depth_[state]; }

  /// True when every reachable configuration was enumerated.
  bool complete() const { return !boundHit_.has_value() && !stoppedEarly_; }
  std::optional<Bound> boundHit() const { return boundHit_; }
  /// State that satisfied the goal predicate, if exploration stopped on one.
  std::optional<std::size_t> goal() const { return goal_; }

  bool hasEdges() const { return recordEdges_; }
  /// Successor states of `state`; only populated when edges were recorded.
  const std::vector<std::uint32_t>& successors(std::size_t state) const { return edges_[state]; }

  /// Packed counts of a state.
  std::span<const std::uint64_t> packed(std::size_t state) const {
    return {words_.data() + state * stride_, stride_};
  }

 private:
  friend class Explorer;

  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> parent_;
  std::vector<RuleId> via_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::vector<std::uint32_t>> edges_;
  std::vector<std::uint32_t> table_;  // open addressing, stores state + 1
  bool recordEdges_ = false;
  bool stoppedEarly_ = false;
  std::optional<Bound> boundHit_;
  std::optional<std::size_t> goal_;

  std::uint64_t hashOf(const std::uint64_t* words) const;
  std::optional<std::size_t> lookup(const std::uint64_t* words) const;
};

struct ExploreOptions {
  bool recordEdges = false;
  /// Stops exploration at the first configuration satisfying the predicate.
  std::function<bool(std::span<const std::uint64_t>)> goal;
};

ReachableSet explore(const Crn& crn, const Configuration& initial, const OracleLimits& limits,
                     const ExploreOptions& options = {});

OracleOutcome decideReachOracle(const Instance& instance, const OracleLimits& limits = {});

OracleOutcome decideProductionOracle(const Crn& crn, const Configuration& initial,
                                     std::size_t species, const Count& k,
                                     const OracleLimits& limits = {});

/// D is universally reachable when it is reachable from every configuration
/// reachable from I.
OracleOutcome decideUniversalOracle(const Instance& instance, const OracleLimits& limits = {});

/// Runs the oracle matching the instance's problem.
OracleOutcome decideOracle(const Instance& instance, const OracleLimits& limits = {});

/// Configurations visited by replaying a trace from `initial`.
std::vector<Configuration> replayTrace(const Crn& crn, const Configuration& initial,
                                       const std::vector<RuleId>& trace);

struct CertificateBlock {
  RuleId rule = 0;
  Count multiplicity;

  friend bool operator==(const CertificateBlock&, const CertificateBlock&) = default;
};

/// Blocks of contiguous applications of one rule each.
struct OrderedCertificate {
  std::vector<CertificateBlock> blocks;

  friend bool operator==(const OrderedCertificate&, const OrderedCertificate&) = default;
};

/// Run-length encoding of a rule trace. Rule ids may repeat.
OrderedCertificate compressTrace(const std::vector<RuleId>& trace);

/// Replays the certificate block by block through applyRun. For Reach and
/// UniversalReach instances the endpoint must equal the target; for Production
/// it must hold at least k copies of the species.
bool verifyCertificate(const Instance& instance, const OrderedCertificate& cert);

/// Searches per-rule multiplicities in feed-forward order. Requires a
/// feed-forward CRN without autogenesis rules (throws PreconditionViolated).
/// `limits.stateCap` bounds the number of search nodes.
std::optional<OrderedCertificate> searchCertificate(const Instance& instance,
                                                    const OracleLimits& limits = {});

}  // namespace crnreach

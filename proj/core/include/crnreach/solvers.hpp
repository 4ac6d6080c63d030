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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crnreach/classify.hpp"
#include "crnreach/crn.hpp"
#include "crnreach/search.hpp"

namespace crnreach {

class NotBipartite : public Error {
 public:
  using Error::Error;
};

class NotUnimolecular : public Error {
 public:
  using Error::Error;
};

class VolumeCapExceeded : public Error {
 public:
  using Error::Error;
};

struct SolverOptions {
  OracleLimits oracle;
  /// Largest expanded vertex count the (2,0) matching procedure will build.
  Count unaryCap = 5000;
  /// When false, procedures run outside their guaranteed class and record a
  /// precondition_violated warning instead of throwing.
  bool checkPreconditions = true;
};

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::string method;
  std::optional<OrderedCertificate> certificate;
  /// Per-rule multiplicities found by the pruning and flow procedures.
  std::optional<std::map<RuleId, Count>> witnessApplications;
  /// Set for Unknown verdicts: the bound or cap that caused them.
  std::string unknownReason;
  /// Procedure whose answer was replaced by the bounded oracle.
  std::optional<std::string> fallbackFrom;
  std::vector<std::string> warnings;
  /// Disagreements between a best-effort procedure and the oracle.
  std::vector<std::string> divergences;
  std::optional<OracleOutcome> oracle;
};

struct PruneResult {
  Count x;
  Configuration prunedTarget;
};

std::vector<Rule> reverseRules(std::span<const Rule> rules);
Crn reverseCrn(const Crn& crn);

/// Removes a non-void leaf rule R from the target: x is fixed by the species R
/// net-produces, the pruned target is D - x*R_a, and for x >= 1 R must be
/// applicable at D - x*R_a and at D - R_a. Returns nullopt when D is
/// inconsistent with I for R. Throws PreconditionViolated for void rules.
std::optional<PruneResult> pruneStep(const Configuration& target, const Configuration& initial,
                                     const Rule& rule);

/// Void-leaf variant: x solves D[i] - x*R_a[i] = I[i] over every species the
/// rule changes.
std::optional<PruneResult> pruneVoidStep(const Configuration& target, const Configuration& initial,
                                         const Rule& rule);

/// Picks the leaf to prune next from the candidates (sorted non-void first,
/// then by id). Returns an index into `candidates`.
using LeafChooser = std::function<std::size_t(const std::vector<RuleId>& candidates)>;

struct PruneRun {
  enum class Status { Reachable, Unreachable, Stuck };
  Status status = Status::Stuck;
  /// Pruned rules with their multiplicities, in pruning order.
  std::vector<std::pair<RuleId, Count>> steps;
  bool prunedVoidOrAutogenesis = false;
};

/// The leaf-pruning recursion shared by the feed-forward procedures.
PruneRun pruneRecursively(const Instance& instance, bool allowVoidLeaves,
                          const LeafChooser& choose = {});

Decision decideFF1SourceNoVoid(const Instance& instance, const SolverOptions& options = {});
Decision decideFF1ConsumingNoAutogenesis(const Instance& instance, const SolverOptions& options = {});
/// Best effort with bounded-oracle fallback for void leaves.
Decision decideFF1Source1Consuming(const Instance& instance, const SolverOptions& options = {});
Decision decideVoid2Matching(const Instance& instance, const SolverOptions& options = {});
Decision decideVoid2BipartiteFlow(const Instance& instance, const SolverOptions& options = {});
Decision decideUnimolecular(const Instance& instance, const SolverOptions& options = {});
Decision produceUnimolecular(const Instance& instance, const SolverOptions& options = {});
Decision decideByOracle(const Instance& instance, const SolverOptions& options = {});

/// Routes the instance to the first applicable procedure.
Decision dispatch(const Instance& instance, const SolverOptions& options = {});

/// Method names accepted by runMethod.
std::vector<std::string> methodNames();

/// Runs a named procedure with preconditions downgraded to warnings.
Decision runMethod(const std::string& method, const Instance& instance, SolverOptions options);

struct CrossCheck {
  OracleOutcome oracle;
  /// False only when both verdicts are definite and differ.
  bool agreement = true;
};

CrossCheck crossCheck(const Instance& instance, const Decision& decision, const OracleLimits& limits);

}  // namespace crnreach

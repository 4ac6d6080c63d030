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

#include "crnreach/solvers.hpp"

#include <algorithm>
#include <queue>

#include "crnreach/graph_algorithms.hpp"

namespace crnreach {

std::vector<Rule> reverseRules(std::span<const Rule> rules) {
  std::vector<Rule> out;
  out.reserve(rules.size());
  for (const auto& r : rules) out.push_back(r.reversed());
  return out;
}

Crn reverseCrn(const Crn& crn) { return crn.withRules(reverseRules(crn.rules())); }

std::optional<PruneResult> pruneStep(const Configuration& target, const Configuration& initial,
                                     const Rule& rule) {
  const auto& delta = rule.traits().applicationVector;
  if (rule.traits().isVoid) throw PreconditionViolated("pruneStep needs a non-void rule");
  std::optional<Count> x;
  for (std::size_t i : rule.traits().produced) {
    Count diff = target[i] - initial[i];
    if (diff < 0 || diff % delta[i] != 0) return std::nullopt;
    Count xi = diff / delta[i];
    if (x && *x != xi) return std::nullopt;
    x = std::move(xi);
  }
  std::vector<Count> pruned(target.counts().begin(), target.counts().end());
  for (const auto& t : rule.deltaTerms()) {
    pruned[t.species] -= *x * t.amount;
    if (pruned[t.species] < 0) return std::nullopt;
  }
  Configuration prunedTarget(std::move(pruned));
  if (*x >= 1 && !tryApplyRun(prunedTarget, rule, *x)) return std::nullopt;
  return PruneResult{*x, std::move(prunedTarget)};
}

std::optional<PruneResult> pruneVoidStep(const Configuration& target, const Configuration& initial,
                                         const Rule& rule) {
  std::optional<Count> x;
  for (const auto& t : rule.deltaTerms()) {
    // D[i] - x*R_a[i] = I[i]
    Count diff = initial[t.species] - target[t.species];
    Count step = -t.amount;
    if (diff % step != 0) return std::nullopt;
    Count xi = diff / step;
    if (xi < 0 || (x && *x != xi)) return std::nullopt;
    x = std::move(xi);
  }
  if (!x) x = 0;
  std::vector<Count> pruned(target.counts().begin(), target.counts().end());
  for (const auto& t : rule.deltaTerms()) {
    pruned[t.species] -= *x * t.amount;
    if (pruned[t.species] < 0) return std::nullopt;
  }
  Configuration prunedTarget(std::move(pruned));
  if (*x >= 1 && !tryApplyRun(prunedTarget, rule, *x)) return std::nullopt;
  return PruneResult{*x, std::move(prunedTarget)};
}

namespace {

bool occursIn(const Rule& from, const Rule& to) {
  for (const auto& t : to.reactantTerms()) {
    if (from.products()[t.species] != 0) return true;
  }
  return false;
}

std::vector<const Rule*> leavesOf(const std::vector<const Rule*>& active) {
  std::vector<const Rule*> leaves;
  for (const Rule* a : active) {
    bool leaf = std::none_of(active.begin(), active.end(),
                             [&](const Rule* b) { return b != a && occursIn(*a, *b); });
    if (leaf) leaves.push_back(a);
  }
  return leaves;
}

// Blocks in application order: the first pruned rule is applied last.
OrderedCertificate certificateFromSteps(const std::vector<std::pair<RuleId, Count>>& steps,
                                        bool reversedOrder) {
  OrderedCertificate cert;
  auto emit = [&](const std::pair<RuleId, Count>& s) {
    if (s.second > 0) cert.blocks.push_back({s.first, s.second});
  };
  if (reversedOrder) {
    for (const auto& s : steps) emit(s);
  } else {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) emit(*it);
  }
  return cert;
}

std::map<RuleId, Count> witnessFromSteps(const Crn& crn,
                                         const std::vector<std::pair<RuleId, Count>>& steps) {
  std::map<RuleId, Count> w;
  for (const auto& r : crn.rules()) w[r.id()] = 0;
  for (const auto& [id, x] : steps) w[id] = x;
  return w;
}

// Either throws or, for forced runs, records a warning.
void requireOrWarn(bool holds, const std::string& what, const SolverOptions& options, Decision& d) {
  if (holds) return;
  if (options.checkPreconditions) throw PreconditionViolated(what);
  d.warnings.push_back("precondition_violated: " + what);
}

Decision fromOracle(const OracleOutcome& outcome, std::string method) {
  Decision d;
  d.method = std::move(method);
  d.verdict = outcome.verdict;
  if (outcome.trace) d.certificate = compressTrace(*outcome.trace);
  if (outcome.verdict == Verdict::Unknown) {
    d.unknownReason = "oracle " + (outcome.boundHit ? toString(*outcome.boundHit) : std::string("bound")) +
                      " hit after " + std::to_string(outcome.statesExplored) + " states";
  }
  d.oracle = outcome;
  return d;
}

bool isReachProblem(const Instance& instance) {
  return std::holds_alternative<Reach>(instance.problem());
}

}  // namespace

PruneRun pruneRecursively(const Instance& instance, bool allowVoidLeaves, const LeafChooser& choose) {
  PruneRun run;
  std::vector<const Rule*> active;
  for (const auto& r : instance.crn().rules()) active.push_back(&r);
  Configuration target = instance.target();
  const Configuration& initial = instance.initial();

  while (!active.empty()) {
    auto leaves = leavesOf(active);
    std::vector<const Rule*> candidates;
    for (const Rule* r : leaves) {
      if (!r->traits().isVoid) candidates.push_back(r);
    }
    auto byId = [](const Rule* a, const Rule* b) { return a->id() < b->id(); };
    std::sort(candidates.begin(), candidates.end(), byId);
    if (allowVoidLeaves) {
      std::vector<const Rule*> voids;
      for (const Rule* r : leaves) {
        if (r->traits().isVoid) voids.push_back(r);
      }
      std::sort(voids.begin(), voids.end(), byId);
      candidates.insert(candidates.end(), voids.begin(), voids.end());
    }
    if (candidates.empty()) {
      run.status = PruneRun::Status::Stuck;
      return run;
    }
    std::size_t pick = 0;
    if (choose) {
      std::vector<RuleId> ids;
      for (const Rule* r : candidates) ids.push_back(r->id());
      pick = choose(ids);
    }
    const Rule& rule = *candidates.at(pick);
    auto result = rule.traits().isVoid ? pruneVoidStep(target, initial, rule)
                                       : pruneStep(target, initial, rule);
    if (rule.traits().isVoid || rule.traits().isAutogenesis) run.prunedVoidOrAutogenesis = true;
    if (!result) {
      run.status = PruneRun::Status::Unreachable;
      return run;
    }
    run.steps.emplace_back(rule.id(), result->x);
    target = std::move(result->prunedTarget);
    active.erase(std::find(active.begin(), active.end(), &rule));
  }
  run.status = target == initial ? PruneRun::Status::Reachable : PruneRun::Status::Unreachable;
  return run;
}

Decision decideFF1SourceNoVoid(const Instance& instance, const SolverOptions& options) {
  Decision d;
  d.method = "ff-ss-nv";
  const auto profile = classify(instance.crn());
  requireOrWarn(isReachProblem(instance), "ff-ss-nv answers reachability only", options, d);
  requireOrWarn(profile.isFeedForward() && profile.maxSource <= 1 && !profile.hasVoid,
                "ff-ss-nv needs a feed-forward, 1-source CRN without void rules", options, d);
  const PruneRun run = pruneRecursively(instance, /*allowVoidLeaves=*/false);
  if (run.status == PruneRun::Status::Stuck) {
    d.verdict = Verdict::Unknown;
    d.unknownReason = "no prunable leaf rule";
    return d;
  }
  d.witnessApplications = witnessFromSteps(instance.crn(), run.steps);
  if (run.status == PruneRun::Status::Unreachable) {
    d.verdict = Verdict::Unreachable;
    return d;
  }
  d.certificate = certificateFromSteps(run.steps, false);
  if (!verifyCertificate(instance.withProblem(Reach{}), *d.certificate)) {
    d.verdict = Verdict::Unknown;
    d.unknownReason = "pruning witness does not replay";
    return d;
  }
  d.verdict = Verdict::Reachable;
  return d;
}

Decision decideFF1ConsumingNoAutogenesis(const Instance& instance, const SolverOptions& options) {
  Decision d;
  d.method = "ff-sc-na";
  const auto profile = classify(instance.crn());
  requireOrWarn(isReachProblem(instance), "ff-sc-na answers reachability only", options, d);
  requireOrWarn(profile.isFeedForward() && profile.maxConsuming <= 1 && !profile.hasAutogenesis,
                "ff-sc-na needs a feed-forward, 1-consuming CRN without autogenesis rules",
                options, d);
  const Instance reversed(reverseCrn(instance.crn()), instance.target(), instance.initial());
  const PruneRun run = pruneRecursively(reversed, /*allowVoidLeaves=*/false);
  if (run.status == PruneRun::Status::Stuck) {
    d.verdict = Verdict::Unknown;
    d.unknownReason = "no prunable leaf rule in the reversed CRN";
    return d;
  }
  d.witnessApplications = witnessFromSteps(instance.crn(), run.steps);
  if (run.status == PruneRun::Status::Unreachable) {
    d.verdict = Verdict::Unreachable;
    return d;
  }
  // Reversed-CRN replay from D runs in reverse pruning order; the original
  // replay from I is its mirror image.
  d.certificate = certificateFromSteps(run.steps, true);
  if (!verifyCertificate(instance.withProblem(Reach{}), *d.certificate)) {
    d.verdict = Verdict::Unknown;
    d.unknownReason = "pruning witness does not replay";
    return d;
  }
  d.verdict = Verdict::Reachable;
  return d;
}

Decision decideByOracle(const Instance& instance, const SolverOptions& options) {
  return fromOracle(decideOracle(instance, options.oracle), "oracle");
}

Decision decideFF1Source1Consuming(const Instance& instance, const SolverOptions& options) {
  Decision d;
  d.method = "ff-ss-sc";
  const auto profile = classify(instance.crn());
  requireOrWarn(isReachProblem(instance), "ff-ss-sc answers reachability only", options, d);
  requireOrWarn(profile.isFeedForward() && profile.maxSource <= 1 && profile.maxConsuming <= 1,
                "ff-ss-sc needs a feed-forward, 1-source, 1-consuming CRN", options, d);
  const PruneRun run = pruneRecursively(instance, /*allowVoidLeaves=*/true);

  std::optional<Verdict> literal;
  if (run.status == PruneRun::Status::Reachable) {
    auto cert = certificateFromSteps(run.steps, false);
    if (verifyCertificate(instance.withProblem(Reach{}), cert)) {
      d.verdict = Verdict::Reachable;
      d.certificate = std::move(cert);
      d.witnessApplications = witnessFromSteps(instance.crn(), run.steps);
      return d;
    }
    literal = Verdict::Reachable;
  } else if (run.status == PruneRun::Status::Unreachable) {
    if (!run.prunedVoidOrAutogenesis) {
      d.verdict = Verdict::Unreachable;
      d.witnessApplications = witnessFromSteps(instance.crn(), run.steps);
      return d;
    }
    literal = Verdict::Unreachable;
  }

  Decision fb = fromOracle(decideOracle(instance, options.oracle), "fallback");
  fb.fallbackFrom = "ff-ss-sc";
  fb.warnings = d.warnings;
  if (literal && fb.verdict != Verdict::Unknown && fb.verdict != *literal) {
    fb.divergences.push_back("ff-ss-sc literal pruning returned " + toString(*literal) +
                             ", bounded oracle returned " + toString(fb.verdict));
  }
  if (run.status == PruneRun::Status::Stuck) {
    fb.warnings.push_back("ff-ss-sc: no prunable leaf rule; answered by the bounded oracle");
  }
  return fb;
}

namespace {

void requireVoid2(const Crn& crn) {
  for (const auto& r : crn.rules()) {
    if (!hasRuleSize(r, 2, 0)) {
      throw NotVoid2System("rule " + std::to_string(r.id()) + " is not of size (2,0)");
    }
  }
}

// Expanded counts X = I - D; nullopt when D is not dominated by I.
std::optional<Configuration> consumedCounts(const Instance& instance) {
  if (!instance.initial().dominates(instance.target())) return std::nullopt;
  std::vector<Count> x(instance.initial().size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = instance.initial()[i] - instance.target()[i];
  return Configuration(std::move(x));
}

void finishVoidWitness(const Instance& instance, std::map<RuleId, Count> applications, Decision& d) {
  OrderedCertificate cert;
  for (const auto& [id, m] : applications) {
    if (m > 0) cert.blocks.push_back({id, m});
  }
  d.witnessApplications = std::move(applications);
  d.certificate = std::move(cert);
  if (!verifyCertificate(instance.withProblem(Reach{}), *d.certificate)) {
    d.verdict = Verdict::Unknown;
    d.unknownReason = "void-rule witness does not replay";
  }
}

}  // namespace

Decision decideVoid2Matching(const Instance& instance, const SolverOptions& options) {
  Decision d;
  d.method = "void2-matching";
  requireOrWarn(isReachProblem(instance), "void2-matching answers reachability only", options, d);
  const Crn& crn = instance.crn();
  requireVoid2(crn);
  auto consumed = consumedCounts(instance);
  if (!consumed) {
    d.verdict = Verdict::Unreachable;
    return d;
  }
  const Count total = volume(*consumed);
  if (total > options.unaryCap) {
    throw VolumeCapExceeded("expanded volume " + toString(total) + " exceeds the unary cap " +
                            toString(options.unaryCap));
  }
  const std::size_t groups = crn.speciesCount();
  std::vector<std::size_t> first(groups + 1, 0);
  for (std::size_t g = 0; g < groups; ++g) {
    first[g + 1] = first[g] + static_cast<std::size_t>((*consumed)[g]);
  }
  const std::size_t n = first[groups];
  std::vector<std::size_t> groupOf(n);
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t v = first[g]; v < first[g + 1]; ++v) groupOf[v] = g;
  }
  std::vector<std::vector<std::size_t>> adjacent(groups);
  std::map<std::pair<std::size_t, std::size_t>, RuleId> ruleFor;
  for (const auto& r : crn.rules()) {
    const auto terms = r.reactantTerms();
    const std::size_t a = terms[0].species;
    const std::size_t b = terms.size() == 1 ? a : terms[1].species;
    if (ruleFor.emplace(std::minmax(a, b), r.id()).second) {
      adjacent[a].push_back(b);
      if (a != b) adjacent[b].push_back(a);
    }
  }
  auto neighbours = [&](std::size_t v, auto&& visit) {
    for (std::size_t h : adjacent[groupOf[v]]) {
      for (std::size_t w = first[h]; w < first[h + 1]; ++w) {
        if (w != v) visit(w);
      }
    }
  };
  const auto mate = maximumMatching(n, neighbours);
  std::map<RuleId, Count> applications;
  for (const auto& r : crn.rules()) applications[r.id()] = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (mate[v] == -1) {
      d.verdict = Verdict::Unreachable;
      return d;
    }
    const auto w = static_cast<std::size_t>(mate[v]);
    if (v < w) applications[ruleFor.at(std::minmax(groupOf[v], groupOf[w]))] += 1;
  }
  d.verdict = Verdict::Reachable;
  finishVoidWitness(instance, std::move(applications), d);
  return d;
}

Decision decideVoid2BipartiteFlow(const Instance& instance, const SolverOptions& options) {
  Decision d;
  d.method = "void2-bipartite-flow";
  requireOrWarn(isReachProblem(instance), "void2-bipartite-flow answers reachability only", options, d);
  const Crn& crn = instance.crn();
  requireVoid2(crn);
  auto partition = bipartitePartition(crn);
  if (!partition) throw NotBipartite("the (2,0) rules do not admit a bipartition of the species");
  auto consumed = consumedCounts(instance);
  if (!consumed) {
    d.verdict = Verdict::Unreachable;
    return d;
  }
  const std::size_t n = crn.speciesCount();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  std::vector<char> inFirst(n, 0);
  for (std::size_t s : partition->first) inFirst[s] = 1;

  Count firstSide = 0;
  Count secondSide = 0;
  FlowNetwork net(n + 2);
  for (std::size_t s = 0; s < n; ++s) {
    const Count& x = (*consumed)[s];
    if (x == 0) continue;
    if (inFirst[s]) {
      net.addEdge(source, s, x);
      firstSide += x;
    } else {
      net.addEdge(s, sink, x);
      secondSide += x;
    }
  }
  // Anything above the total supply behaves as an unbounded capacity.
  const Count unbounded = firstSide + secondSide + 1;
  std::vector<std::pair<RuleId, std::size_t>> ruleEdges;
  for (const auto& r : crn.rules()) {
    const auto terms = r.reactantTerms();
    std::size_t a = terms[0].species;
    std::size_t b = terms[1].species;
    if (!inFirst[a]) std::swap(a, b);
    ruleEdges.emplace_back(r.id(), net.addEdge(a, b, unbounded));
  }
  const Count flow = net.maxFlow(source, sink);
  // Every application removes one molecule from each side, so both sides must
  // be saturated.
  if (firstSide != secondSide || flow != firstSide) {
    d.verdict = Verdict::Unreachable;
    return d;
  }
  std::map<RuleId, Count> applications;
  for (const auto& [id, edge] : ruleEdges) applications[id] += net.flow(edge);
  d.verdict = Verdict::Reachable;
  finishVoidWitness(instance, std::move(applications), d);
  return d;
}

namespace {

void requireUnimolecular(const Crn& crn) {
  for (const auto& r : crn.rules()) {
    if (!hasRuleSize(r, 1, 1)) {
      throw NotUnimolecular("rule " + std::to_string(r.id()) + " is not of size (1,1)");
    }
  }
}

struct SpeciesGraph {
  // (target species, rule id) per source species.
  std::vector<std::vector<std::pair<std::size_t, RuleId>>> out;
};

SpeciesGraph speciesGraph(const Crn& crn) {
  SpeciesGraph g;
  g.out.resize(crn.speciesCount());
  for (const auto& r : crn.rules()) {
    const std::size_t from = r.reactantTerms()[0].species;
    std::size_t to = from;
    for (std::size_t i = 0; i < crn.speciesCount(); ++i) {
      if (r.products()[i] != 0) to = i;
    }
    if (to != from) g.out[from].emplace_back(to, r.id());
  }
  return g;
}

// BFS tree from `start`: (parent species, rule) per reached species.
std::vector<std::optional<std::pair<std::size_t, RuleId>>> bfsTree(const SpeciesGraph& g,
                                                                  std::size_t start,
                                                                  std::vector<char>& reached) {
  std::vector<std::optional<std::pair<std::size_t, RuleId>>> via(g.out.size());
  reached.assign(g.out.size(), 0);
  reached[start] = 1;
  std::queue<std::size_t> q;
  q.push(start);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (const auto& [w, rule] : g.out[v]) {
      if (!reached[w]) {
        reached[w] = 1;
        via[w] = std::make_pair(v, rule);
        q.push(w);
      }
    }
  }
  return via;
}

}  // namespace

Decision decideUnimolecular(const Instance& instance, const SolverOptions& options) {
  Decision d;
  d.method = "unimolecular";
  requireOrWarn(isReachProblem(instance), "unimolecular answers reachability only", options, d);
  const Crn& crn = instance.crn();
  requireUnimolecular(crn);
  const auto& initial = instance.initial();
  const auto& target = instance.target();
  if (volume(initial) != volume(target)) {
    d.verdict = Verdict::Unreachable;
    return d;
  }
  const std::size_t n = crn.speciesCount();
  const SpeciesGraph g = speciesGraph(crn);
  // Supply/demand transport over the reachability closure.
  FlowNetwork net(2 * n + 2);
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  const Count unbounded = volume(initial) + 1;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> routes;
  std::vector<std::vector<std::optional<std::pair<std::size_t, RuleId>>>> trees(n);
  std::vector<char> reached;
  for (std::size_t u = 0; u < n; ++u) {
    if (initial[u] > 0) net.addEdge(source, u, initial[u]);
    if (target[u] > 0) net.addEdge(n + u, sink, target[u]);
    if (initial[u] == 0) continue;
    trees[u] = bfsTree(g, u, reached);
    for (std::size_t v = 0; v < n; ++v) {
      if (reached[v] && target[v] > 0) routes.emplace_back(u, v, net.addEdge(u, n + v, unbounded));
    }
  }
  if (net.maxFlow(source, sink) != volume(initial)) {
    d.verdict = Verdict::Unreachable;
    return d;
  }
  // Ship each route's tokens along its BFS path, one block per edge.
  OrderedCertificate cert;
  std::map<RuleId, Count> applications;
  for (const auto& r : crn.rules()) applications[r.id()] = 0;
  for (const auto& [u, v, edge] : routes) {
    const Count f = net.flow(edge);
    if (f == 0 || u == v) continue;
    std::vector<RuleId> path;
    for (std::size_t w = v; w != u; w = (*trees[u][w]).first) path.push_back((*trees[u][w]).second);
    std::reverse(path.begin(), path.end());
    for (RuleId id : path) {
      cert.blocks.push_back({id, f});
      applications[id] += f;
    }
  }
  d.verdict = Verdict::Reachable;
  d.certificate = std::move(cert);
  d.witnessApplications = std::move(applications);
  if (!verifyCertificate(instance.withProblem(Reach{}), *d.certificate)) {
    d.verdict = Verdict::Unknown;
    d.unknownReason = "routing witness does not replay";
  }
  return d;
}

Decision produceUnimolecular(const Instance& instance, const SolverOptions& options) {
  Decision d;
  d.method = "unimolecular-production";
  const auto* prod = std::get_if<Production>(&instance.problem());
  if (!prod) {
    if (options.checkPreconditions) throw PreconditionViolated("produceUnimolecular needs a production problem");
    d.warnings.push_back("precondition_violated: not a production problem");
    d.unknownReason = "no production target";
    return d;
  }
  const Crn& crn = instance.crn();
  requireUnimolecular(crn);
  const SpeciesGraph g = speciesGraph(crn);
  // Species with a directed path to the target: reverse search from it.
  std::vector<std::vector<std::size_t>> in(crn.speciesCount());
  for (std::size_t v = 0; v < g.out.size(); ++v) {
    for (const auto& [w, rule] : g.out[v]) in[w].push_back(v);
  }
  std::vector<char> reaches(crn.speciesCount(), 0);
  std::queue<std::size_t> q;
  reaches[prod->species] = 1;
  q.push(prod->species);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t u : in[v]) {
      if (!reaches[u]) {
        reaches[u] = 1;
        q.push(u);
      }
    }
  }
  Count supply = 0;
  for (std::size_t u = 0; u < crn.speciesCount(); ++u) {
    if (reaches[u]) supply += instance.initial()[u];
  }
  d.verdict = supply >= prod->k ? Verdict::Reachable : Verdict::Unreachable;
  return d;
}

Decision dispatch(const Instance& instance, const SolverOptions& options) {
  const Crn& crn = instance.crn();
  const auto profile = classify(crn);
  if (std::holds_alternative<Production>(instance.problem())) {
    if (profile.allUnimolecular) return produceUnimolecular(instance, options);
    return decideByOracle(instance, options);
  }
  if (std::holds_alternative<UniversalReach>(instance.problem())) {
    return decideByOracle(instance, options);
  }
  if (profile.allUnimolecular) return decideUnimolecular(instance, options);
  if (profile.isFeedForward()) {
    if (profile.maxSource <= 1 && !profile.hasVoid) return decideFF1SourceNoVoid(instance, options);
    if (profile.maxConsuming <= 1 && !profile.hasAutogenesis) {
      return decideFF1ConsumingNoAutogenesis(instance, options);
    }
    if (profile.maxSource <= 1 && profile.maxConsuming <= 1) {
      return decideFF1Source1Consuming(instance, options);
    }
  }
  if (profile.allVoid2) {
    if (profile.bipartition) return decideVoid2BipartiteFlow(instance, options);
    auto consumed = consumedCounts(instance);
    if (!consumed || volume(*consumed) <= options.unaryCap) return decideVoid2Matching(instance, options);
    Decision d;
    d.method = "void2-matching";
    d.verdict = Verdict::Unknown;
    d.unknownReason = "unary cap: expanded volume " + toString(volume(*consumed)) +
                      " exceeds cap " + toString(options.unaryCap) + " for a non-bipartite (2,0) CRN";
    return d;
  }
  return decideByOracle(instance, options);
}

std::vector<std::string> methodNames() {
  return {"unimolecular", "unimolecular-production", "ff-ss-nv", "ff-sc-na", "ff-ss-sc",
          "void2-bipartite-flow", "void2-matching", "oracle"};
}

Decision runMethod(const std::string& method, const Instance& instance, SolverOptions options) {
  options.checkPreconditions = false;
  try {
    if (method == "unimolecular") return decideUnimolecular(instance, options);
    if (method == "unimolecular-production") return produceUnimolecular(instance, options);
    if (method == "ff-ss-nv") return decideFF1SourceNoVoid(instance, options);
    if (method == "ff-sc-na") return decideFF1ConsumingNoAutogenesis(instance, options);
    if (method == "ff-ss-sc") return decideFF1Source1Consuming(instance, options);
    if (method == "void2-bipartite-flow") return decideVoid2BipartiteFlow(instance, options);
    if (method == "void2-matching") return decideVoid2Matching(instance, options);
    if (method == "oracle") return decideByOracle(instance, options);
  } catch (const Error& e) {
    // Structural requirements (rule sizes, bipartition, caps) cannot be waived.
    Decision d;
    d.method = method;
    d.verdict = Verdict::Unknown;
    d.unknownReason = e.what();
    d.warnings.push_back(std::string("precondition_violated: ") + e.what());
    return d;
  }
  throw std::invalid_argument("unknown method '" + method + "'");
}

CrossCheck crossCheck(const Instance& instance, const Decision& decision, const OracleLimits& limits) {
  CrossCheck cc;
  cc.oracle = decision.oracle ? *decision.oracle : decideOracle(instance, limits);
  cc.agreement = decision.verdict == Verdict::Unknown || cc.oracle.verdict == Verdict::Unknown ||
                 decision.verdict == cc.oracle.verdict;
  return cc;
}

}  // namespace crnreach

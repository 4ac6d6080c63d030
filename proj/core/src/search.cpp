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

#include "crnreach/search.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "crnreach/classify.hpp"

namespace crnreach {

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Reachable: return "reachable";
    case Verdict::Unreachable: return "unreachable";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string toString(Bound b) {
  switch (b) {
    case Bound::StateCap: return "state-cap";
    case Bound::VolumeCap: return "volume-cap";
    case Bound::StepCap: return "step-cap";
  }
  return "state-cap";
}

namespace {

// Counts above this never enter the packed arena; keeps int64 deltas safe.
constexpr std::uint64_t kWordLimit = std::uint64_t{1} << 62;

std::optional<std::uint64_t> toWord(const Count& c) {
  if (c < 0 || c > kWordLimit) return std::nullopt;
  return static_cast<std::uint64_t>(c);
}

std::optional<std::vector<std::uint64_t>> pack(const Configuration& c) {
  std::vector<std::uint64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto w = toWord(c[i]);
    if (!w) return std::nullopt;
    out[i] = *w;
  }
  return out;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct CompiledRule {
  RuleId id = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> need;
  std::vector<std::pair<std::uint32_t, std::int64_t>> delta;
  std::int64_t volumeDelta = 0;
  bool overflow = false;  // some amount is too large to ever fit under the cap
};

std::vector<CompiledRule> compile(const Crn& crn) {
  std::vector<CompiledRule> out;
  out.reserve(crn.ruleCount());
  for (const auto& r : crn.rules()) {
    CompiledRule cr;
    cr.id = r.id();
    for (const auto& t : r.reactantTerms()) {
      auto w = toWord(t.amount);
      if (!w) {
        cr.overflow = true;
        break;
      }
      cr.need.emplace_back(static_cast<std::uint32_t>(t.species), *w);
    }
    Count vd = 0;
    for (const auto& t : r.deltaTerms()) {
      if (t.amount > Count(kWordLimit) || t.amount < -Count(kWordLimit)) {
        cr.overflow = true;
        break;
      }
      cr.delta.emplace_back(static_cast<std::uint32_t>(t.species), static_cast<std::int64_t>(t.amount));
      vd += t.amount;
    }
    if (!cr.overflow) cr.volumeDelta = static_cast<std::int64_t>(vd);
    out.push_back(std::move(cr));
  }
  return out;
}

}  // namespace

std::uint64_t ReachableSet::hashOf(const std::uint64_t* words) const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ stride_;
  for (std::size_t i = 0; i < stride_; ++i) h = mix(h ^ words[i]);
  return h;
}

std::optional<std::size_t> ReachableSet::lookup(const std::uint64_t* words) const {
  if (table_.empty()) return std::nullopt;
  const std::size_t mask = table_.size() - 1;
  for (std::size_t slot = hashOf(words) & mask;; slot = (slot + 1) & mask) {
    const std::uint32_t entry = table_[slot];
    if (entry == 0) return std::nullopt;
    const std::size_t state = entry - 1;
    if (std::equal(words, words + stride_, words_.data() + state * stride_)) return state;
  }
}

Configuration ReachableSet::configuration(std::size_t state) const {
  std::vector<Count> counts(stride_);
  for (std::size_t i = 0; i < stride_; ++i) counts[i] = words_[state * stride_ + i];
  return Configuration(std::move(counts));
}

std::optional<std::size_t> ReachableSet::find(const Configuration& c) const {
  if (c.size() != stride_) return std::nullopt;
  auto packedC = pack(c);
  if (!packedC) return std::nullopt;
  return lookup(packedC->data());
}

std::vector<RuleId> ReachableSet::traceTo(std::size_t state) const {
  std::vector<RuleId> trace;
  while (state != 0) {
    trace.push_back(via_[state]);
    state = parent_[state];
  }
  std::reverse(trace.begin(), trace.end());
  return trace;
}

class Explorer {
 public:
  Explorer(const Crn& crn, const OracleLimits& limits, const ExploreOptions& options)
      : crn_(crn), options_(options), rules_(compile(crn)) {
    cap_ = limits.volumeCap > Count(kWordLimit) ? kWordLimit
                                                : static_cast<std::uint64_t>(limits.volumeCap);
    stateCap_ = std::min<std::size_t>(limits.stateCap, std::numeric_limits<std::uint32_t>::max() - 1);
    stepCap_ = limits.stepCap;
  }

  ReachableSet run(const Configuration& initial) {
    ReachableSet set;
    set.stride_ = crn_.speciesCount();
    set.recordEdges_ = options_.recordEdges;
    auto start = pack(initial);
    if (!start || volume(initial) > Count(cap_)) {
      set.boundHit_ = Bound::VolumeCap;
      return set;
    }
    std::uint64_t startVolume = 0;
    for (auto w : *start) startVolume += w;
    insert(set, start->data(), 0, 0, 0);
    volumes_.push_back(startVolume);
    if (options_.goal && options_.goal(set.packed(0))) {
      set.goal_ = 0;
      set.stoppedEarly_ = true;
      return set;
    }

    const std::size_t stride = set.stride_;
    std::vector<std::uint64_t> current(stride);
    std::vector<std::uint64_t> next(stride);
    for (std::size_t head = 0; head < set.size(); ++head) {
      std::copy_n(set.words_.data() + head * stride, stride, current.begin());
      const bool atDepthCap = stepCap_ && set.depth_[head] >= *stepCap_;
      for (const auto& rule : rules_) {
        if (rule.overflow) {
          if (applicable(rule, current)) set.boundHit_ = Bound::VolumeCap;
          continue;
        }
        if (!applicable(rule, current)) continue;
        if (atDepthCap) {
          set.boundHit_ = Bound::StepCap;
          break;
        }
        const std::int64_t newVolume = static_cast<std::int64_t>(volumes_[head]) + rule.volumeDelta;
        if (newVolume < 0 || static_cast<std::uint64_t>(newVolume) > cap_) {
          set.boundHit_ = Bound::VolumeCap;
          continue;
        }
        next = current;
        for (auto [s, d] : rule.delta) next[s] = static_cast<std::uint64_t>(static_cast<std::int64_t>(next[s]) + d);
        std::size_t target;
        if (auto found = set.lookup(next.data())) {
          target = *found;
        } else {
          if (set.size() >= stateCap_) {
            set.boundHit_ = Bound::StateCap;
            continue;
          }
          target = set.size();
          insert(set, next.data(), static_cast<std::uint32_t>(head), rule.id, set.depth_[head] + 1);
          volumes_.push_back(static_cast<std::uint64_t>(newVolume));
          if (options_.goal && options_.goal(set.packed(target))) {
            if (set.recordEdges_) set.edges_[head].push_back(static_cast<std::uint32_t>(target));
            set.goal_ = target;
            set.stoppedEarly_ = true;
            return set;
          }
        }
        if (set.recordEdges_) set.edges_[head].push_back(static_cast<std::uint32_t>(target));
      }
    }
    return set;
  }

 private:
  static bool applicable(const CompiledRule& rule, const std::vector<std::uint64_t>& c) {
    for (auto [s, need] : rule.need) {
      if (c[s] < need) return false;
    }
    return true;
  }

  void insert(ReachableSet& set, const std::uint64_t* words, std::uint32_t parent, RuleId via,
              std::uint32_t depth) {
    const std::size_t state = set.size();
    set.words_.insert(set.words_.end(), words, words + set.stride_);
    set.parent_.push_back(parent);
    set.via_.push_back(via);
    set.depth_.push_back(depth);
    if (set.recordEdges_) set.edges_.emplace_back();
    if ((state + 1) * 2 > set.table_.size()) rehash(set, std::max<std::size_t>(64, set.table_.size() * 2));
    place(set, state);
  }

  static void place(ReachableSet& set, std::size_t state) {
    const std::size_t mask = set.table_.size() - 1;
    std::size_t slot = set.hashOf(set.words_.data() + state * set.stride_) & mask;
    while (set.table_[slot] != 0) slot = (slot + 1) & mask;
    set.table_[slot] = static_cast<std::uint32_t>(state + 1);
  }

  static void rehash(ReachableSet& set, std::size_t capacity) {
    set.table_.assign(capacity, 0);
    for (std::size_t s = 0; s + 1 < set.size(); ++s) place(set, s);
  }

  const Crn& crn_;
  const ExploreOptions& options_;
  std::vector<CompiledRule> rules_;
  std::vector<std::uint64_t> volumes_;
  std::uint64_t cap_ = 0;
  std::size_t stateCap_ = 0;
  std::optional<std::size_t> stepCap_;
};

ReachableSet explore(const Crn& crn, const Configuration& initial, const OracleLimits& limits,
                     const ExploreOptions& options) {
  if (initial.size() != crn.speciesCount()) throw InvalidCrn("initial configuration size mismatch");
  return Explorer(crn, limits, options).run(initial);
}

namespace {

OracleOutcome outcomeFrom(const ReachableSet& set) {
  OracleOutcome out;
  out.statesExplored = set.size();
  if (auto g = set.goal()) {
    out.verdict = Verdict::Reachable;
    out.trace = set.traceTo(*g);
    return out;
  }
  out.boundHit = set.boundHit();
  out.verdict = set.complete() ? Verdict::Unreachable : Verdict::Unknown;
  return out;
}

}  // namespace

OracleOutcome decideReachOracle(const Instance& instance, const OracleLimits& limits) {
  const auto& target = instance.target();
  if (instance.initial() == target) {
    return {Verdict::Reachable, 1, std::nullopt, std::vector<RuleId>{}};
  }
  ExploreOptions options;
  auto packedTarget = pack(target);
  if (packedTarget) {
    options.goal = [t = *packedTarget](std::span<const std::uint64_t> c) {
      return std::equal(c.begin(), c.end(), t.begin());
    };
  }
  return outcomeFrom(explore(instance.crn(), instance.initial(), limits, options));
}

OracleOutcome decideProductionOracle(const Crn& crn, const Configuration& initial,
                                     std::size_t species, const Count& k,
                                     const OracleLimits& limits) {
  if (k < 1) throw InvalidCrn("production threshold k must be at least 1");
  if (species >= crn.speciesCount()) throw InvalidCrn("production species out of range");
  ExploreOptions options;
  if (auto kw = toWord(k)) {
    options.goal = [species, kw = *kw](std::span<const std::uint64_t> c) { return c[species] >= kw; };
  }
  if (initial[species] >= k) return {Verdict::Reachable, 1, std::nullopt, std::vector<RuleId>{}};
  return outcomeFrom(explore(crn, initial, limits, options));
}

OracleOutcome decideUniversalOracle(const Instance& instance, const OracleLimits& limits) {
  ExploreOptions options;
  options.recordEdges = true;
  const ReachableSet set = explore(instance.crn(), instance.initial(), limits, options);
  OracleOutcome out;
  out.statesExplored = set.size();
  if (!set.complete()) {
    out.boundHit = set.boundHit();
    out.verdict = Verdict::Unknown;
    return out;
  }
  auto targetState = set.find(instance.target());
  if (!targetState) {
    out.verdict = Verdict::Unreachable;
    return out;
  }
  // Every state reaches D iff backward search from D over the recorded edges
  // covers the whole closure.
  std::vector<std::vector<std::uint32_t>> predecessors(set.size());
  for (std::size_t s = 0; s < set.size(); ++s) {
    for (auto t : set.successors(s)) predecessors[t].push_back(static_cast<std::uint32_t>(s));
  }
  std::vector<char> seen(set.size(), 0);
  std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(*targetState)};
  seen[*targetState] = 1;
  std::size_t covered = 1;
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto p : predecessors[s]) {
      if (!seen[p]) {
        seen[p] = 1;
        ++covered;
        stack.push_back(p);
      }
    }
  }
  out.verdict = covered == set.size() ? Verdict::Reachable : Verdict::Unreachable;
  if (out.verdict == Verdict::Reachable) out.trace = set.traceTo(*targetState);
  return out;
}

OracleOutcome decideOracle(const Instance& instance, const OracleLimits& limits) {
  if (const auto* prod = std::get_if<Production>(&instance.problem())) {
    return decideProductionOracle(instance.crn(), instance.initial(), prod->species, prod->k, limits);
  }
  if (std::holds_alternative<UniversalReach>(instance.problem())) {
    return decideUniversalOracle(instance, limits);
  }
  return decideReachOracle(instance, limits);
}

std::vector<Configuration> replayTrace(const Crn& crn, const Configuration& initial,
                                       const std::vector<RuleId>& trace) {
  std::vector<Configuration> configs{initial};
  for (RuleId id : trace) configs.push_back(applyOnce(configs.back(), crn.ruleById(id)));
  return configs;
}

OrderedCertificate compressTrace(const std::vector<RuleId>& trace) {
  OrderedCertificate cert;
  for (RuleId id : trace) {
    if (!cert.blocks.empty() && cert.blocks.back().rule == id) {
      cert.blocks.back().multiplicity += 1;
    } else {
      cert.blocks.push_back({id, 1});
    }
  }
  return cert;
}

bool verifyCertificate(const Instance& instance, const OrderedCertificate& cert) {
  const Crn& crn = instance.crn();
  Configuration current = instance.initial();
  for (const auto& block : cert.blocks) {
    if (!crn.findRule(block.rule)) return false;
    auto next = tryApplyRun(current, crn.ruleById(block.rule), block.multiplicity);
    if (!next) return false;
    current = *std::move(next);
  }
  if (const auto* prod = std::get_if<Production>(&instance.problem())) {
    return current[prod->species] >= prod->k;
  }
  return current == instance.target();
}

namespace {

class CertificateSearch {
 public:
  CertificateSearch(const Instance& instance, std::vector<const Rule*> order, std::size_t nodeCap)
      : instance_(instance), order_(std::move(order)), nodeCap_(nodeCap) {
    const std::size_t n = instance.crn().speciesCount();
    lastChanger_.assign(n, -1);
    changers_.assign(order_.size(), {});
    for (std::size_t k = 0; k < order_.size(); ++k) {
      for (const auto& t : order_[k]->deltaTerms()) lastChanger_[t.species] = static_cast<long>(k);
    }
    // Species whose only remaining changer is rule k pin its multiplicity.
    for (std::size_t i = 0; i < n; ++i) {
      long changers = 0;
      long only = -1;
      for (std::size_t k = 0; k < order_.size(); ++k) {
        for (const auto& t : order_[k]->deltaTerms()) {
          if (t.species == i) {
            ++changers;
            only = static_cast<long>(k);
          }
        }
      }
      if (changers == 1) changers_[static_cast<std::size_t>(only)].push_back(i);
    }
  }

  std::optional<OrderedCertificate> run() {
    std::vector<CertificateBlock> blocks;
    if (dfs(0, instance_.initial(), blocks)) return OrderedCertificate{blocks};
    return std::nullopt;
  }

 private:
  bool settled(std::size_t k, const Configuration& c) const {
    const auto& target = instance_.target();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (lastChanger_[i] < static_cast<long>(k) && c[i] != target[i]) return false;
    }
    return true;
  }

  // Largest m for which m back-to-back applications are legal.
  static Count maxRun(const Configuration& c, const Rule& r) {
    if (!isApplicable(c, r)) return 0;
    std::optional<Count> best;
    const auto& delta = r.traits().applicationVector;
    for (const auto& t : r.reactantTerms()) {
      if (delta[t.species] < 0) {
        Count m = (c[t.species] - t.amount) / (-delta[t.species]) + 1;
        if (!best || m < *best) best = m;
      }
    }
    // Consumed species absent from the reactant terms cannot exist; no
    // autogenesis guarantees a consumed species.
    return best.value_or(0);
  }

  bool dfs(std::size_t k, const Configuration& c, std::vector<CertificateBlock>& blocks) {
    if (++nodes_ > nodeCap_) return false;
    if (!settled(k, c)) return false;
    if (k == order_.size()) return true;
    std::string key = std::to_string(k);
    for (const auto& x : c.counts()) key += ',' + x.str();
    if (failed_.count(key)) return false;

    const Rule& rule = *order_[k];
    const Count upper = maxRun(c, rule);
    std::optional<Count> forced;
    const auto& delta = rule.traits().applicationVector;
    for (std::size_t i : changers_[k]) {
      Count diff = instance_.target()[i] - c[i];
      if (diff % delta[i] != 0) {
        failed_.insert(key);
        return false;
      }
      Count m = diff / delta[i];
      if (m < 0 || m > upper || (forced && *forced != m)) {
        failed_.insert(key);
        return false;
      }
      forced = m;
    }
    Count lo = forced ? *forced : Count(0);
    Count hi = forced ? *forced : upper;
    for (Count m = hi; m >= lo; --m) {
      auto next = tryApplyRun(c, rule, m);
      if (!next) continue;
      if (m > 0) blocks.push_back({rule.id(), m});
      if (dfs(k + 1, *next, blocks)) return true;
      if (m > 0) blocks.pop_back();
      if (nodes_ > nodeCap_) return false;
    }
    failed_.insert(key);
    return false;
  }

  const Instance& instance_;
  std::vector<const Rule*> order_;
  std::vector<long> lastChanger_;
  std::vector<std::vector<std::size_t>> changers_;
  std::set<std::string> failed_;
  std::size_t nodeCap_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<OrderedCertificate> searchCertificate(const Instance& instance,
                                                    const OracleLimits& limits) {
  const Crn& crn = instance.crn();
  auto order = feedForwardOrder(crn);
  if (!order) throw PreconditionViolated("searchCertificate requires a feed-forward CRN");
  for (const auto& r : crn.rules()) {
    if (r.traits().isAutogenesis) {
      throw PreconditionViolated("searchCertificate requires a CRN without autogenesis rules");
    }
  }
  if (!std::holds_alternative<Reach>(instance.problem())) {
    throw PreconditionViolated("searchCertificate answers reachability instances only");
  }
  std::vector<const Rule*> rules;
  for (RuleId id : *order) rules.push_back(&crn.ruleById(id));
  auto cert = CertificateSearch(instance, std::move(rules), limits.stateCap).run();
  if (cert && !verifyCertificate(instance, *cert)) return std::nullopt;
  return cert;
}

}  // namespace crnreach

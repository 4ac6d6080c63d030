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

#include "crnreach/crn.hpp"

#include <algorithm>
#include <cctype>

namespace crnreach {

Configuration::Configuration(std::size_t species) : counts_(species) {}

Configuration::Configuration(std::vector<Count> counts) : counts_(std::move(counts)) {
  for (const auto& c : counts_) {
    if (c < 0) throw InvalidCrn("configuration entries must be non-negative");
  }
}

void Configuration::set(std::size_t i, Count value) {
  if (value < 0) throw InvalidCrn("configuration entries must be non-negative");
  counts_.at(i) = std::move(value);
}

void Configuration::add(std::size_t i, const Count& delta) {
  Count next = counts_.at(i) + delta;
  if (next < 0) throw InvalidCrn("configuration entries must be non-negative");
  counts_[i] = std::move(next);
}

bool Configuration::isZero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](const Count& c) { return c == 0; });
}

bool Configuration::dominates(const Configuration& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (counts_[i] < other.counts_[i]) return false;
  }
  return true;
}

Count volume(const Configuration& c) {
  Count total = 0;
  for (const auto& x : c.counts()) total += x;
  return total;
}

namespace {

RuleTraits computeTraits(const Configuration& reactants, const Configuration& products) {
  RuleTraits t;
  t.applicationVector.resize(reactants.size());
  t.size = {volume(reactants), volume(products)};
  bool anyPositive = false;
  bool anyNegative = false;
  for (std::size_t i = 0; i < reactants.size(); ++i) {
    Count d = products[i] - reactants[i];
    if (d > 0) {
      anyPositive = true;
      t.produced.push_back(i);
    } else if (d < 0) {
      anyNegative = true;
      t.consumed.push_back(i);
    } else if (reactants[i] > 0) {
      t.catalysts.push_back(i);
    }
    t.applicationVector[i] = std::move(d);
  }
  t.isVoid = !anyPositive;
  t.isAutogenesis = !anyNegative;
  t.volumeDelta = t.size.products - t.size.reactants;
  return t;
}

}  // namespace

Rule::Rule(RuleId id, Configuration reactants, Configuration products)
    : id_(id), reactants_(std::move(reactants)), products_(std::move(products)) {
  if (reactants_.size() != products_.size()) {
    throw InvalidCrn("rule " + std::to_string(id_) + ": reactant/product length mismatch");
  }
  if (reactants_.isZero() && products_.isZero()) {
    throw InvalidCrn("rule " + std::to_string(id_) + ": the empty rule 0 -> 0 is not allowed");
  }
  traits_ = computeTraits(reactants_, products_);
  for (std::size_t i = 0; i < reactants_.size(); ++i) {
    if (reactants_[i] != 0) reactantTerms_.push_back({i, reactants_[i]});
    if (traits_.applicationVector[i] != 0) deltaTerms_.push_back({i, traits_.applicationVector[i]});
  }
}

Rule Rule::reversed() const { return Rule(id_, products_, reactants_); }

Rule Rule::withId(RuleId id) const {
  Rule copy = *this;
  copy.id_ = id;
  return copy;
}

RuleTraits ruleTraits(const Rule& r) { return r.traits(); }

bool isApplicable(const Configuration& c, const Rule& r) {
  for (const auto& term : r.reactantTerms()) {
    if (c[term.species] < term.amount) return false;
  }
  return true;
}

Configuration applyOnce(const Configuration& c, const Rule& r) {
  if (c.size() != r.reactants().size()) throw NotApplicable("configuration/rule size mismatch");
  if (!isApplicable(c, r)) {
    throw NotApplicable("rule " + std::to_string(r.id()) + " is not applicable");
  }
  Configuration next = c;
  for (const auto& term : r.deltaTerms()) next.add(term.species, term.amount);
  return next;
}

std::optional<Configuration> tryApplyRun(const Configuration& c, const Rule& r, const Count& k) {
  if (c.size() != r.reactants().size() || k < 0) return std::nullopt;
  if (k == 0) return c;
  // Check both endpoints: the start c and the start of the last application.
  const Count last = k - 1;
  for (const auto& term : r.reactantTerms()) {
    if (c[term.species] < term.amount) return std::nullopt;
  }
  std::vector<Count> lastStart(c.counts().begin(), c.counts().end());
  for (const auto& term : r.deltaTerms()) lastStart[term.species] += last * term.amount;
  for (const auto& term : r.reactantTerms()) {
    if (lastStart[term.species] < term.amount) return std::nullopt;
  }
  for (const auto& term : r.deltaTerms()) lastStart[term.species] += term.amount;
  return Configuration(std::move(lastStart));
}

Configuration applyRun(const Configuration& c, const Rule& r, const Count& k) {
  auto result = tryApplyRun(c, r, k);
  if (!result) {
    throw IllegalRun("rule " + std::to_string(r.id()) + " cannot be applied " + toString(k) +
                     " times in a row");
  }
  return *std::move(result);
}

bool isValidSpeciesName(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '^' || ch == '*' ||
           ch == '\'';
  });
}

Crn::Crn(std::vector<std::string> species, std::vector<Rule> rules)
    : species_(std::move(species)), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < species_.size(); ++i) {
    if (!isValidSpeciesName(species_[i])) {
      throw InvalidCrn("invalid species name '" + species_[i] + "'");
    }
    if (!index_.emplace(species_[i], i).second) {
      throw InvalidCrn("duplicate species '" + species_[i] + "'");
    }
  }
  for (std::size_t p = 0; p < rules_.size(); ++p) {
    const Rule& r = rules_[p];
    if (r.reactants().size() != species_.size()) {
      throw InvalidCrn("rule " + std::to_string(r.id()) + " is not sized to the alphabet");
    }
    if (!rulePos_.emplace(r.id(), p).second) {
      throw InvalidCrn("duplicate rule id " + std::to_string(r.id()));
    }
  }
}

std::optional<std::size_t> Crn::findSpecies(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Crn::speciesIndex(std::string_view name) const {
  auto i = findSpecies(name);
  if (!i) throw InvalidCrn("unknown species '" + std::string(name) + "'");
  return *i;
}

std::optional<std::size_t> Crn::findRule(RuleId id) const {
  auto it = rulePos_.find(id);
  if (it == rulePos_.end()) return std::nullopt;
  return it->second;
}

const Rule& Crn::ruleById(RuleId id) const {
  auto p = findRule(id);
  if (!p) throw InvalidCrn("unknown rule id " + std::to_string(id));
  return rules_[*p];
}

Configuration Crn::configuration(
    std::initializer_list<std::pair<std::string_view, Count>> entries) const {
  Configuration c(species_.size());
  for (const auto& [name, count] : entries) c.add(speciesIndex(name), count);
  return c;
}

Configuration Crn::configuration(const std::vector<std::pair<std::string, Count>>& entries) const {
  Configuration c(species_.size());
  for (const auto& [name, count] : entries) c.add(speciesIndex(name), count);
  return c;
}

Crn Crn::withRules(std::vector<Rule> rules) const { return Crn(species_, std::move(rules)); }

std::size_t CrnBuilder::species(const std::string& name) {
  auto [it, inserted] = index_.emplace(name, names_.size());
  if (inserted) names_.push_back(name);
  return it->second;
}

RuleId CrnBuilder::addRule(const Multiset& reactants, const Multiset& products) {
  for (const auto& [name, count] : reactants) species(name);
  for (const auto& [name, count] : products) species(name);
  rules_.emplace_back(reactants, products);
  return static_cast<RuleId>(rules_.size() - 1);
}

Crn CrnBuilder::build() const {
  std::vector<Rule> rules;
  rules.reserve(rules_.size());
  for (std::size_t p = 0; p < rules_.size(); ++p) {
    Configuration reactants(names_.size());
    Configuration products(names_.size());
    for (const auto& [name, count] : rules_[p].first) reactants.add(index_.at(name), count);
    for (const auto& [name, count] : rules_[p].second) products.add(index_.at(name), count);
    rules.emplace_back(static_cast<RuleId>(p), std::move(reactants), std::move(products));
  }
  return Crn(names_, std::move(rules));
}

std::string problemName(const Problem& p) {
  if (std::holds_alternative<Reach>(p)) return "reach";
  if (std::holds_alternative<Production>(p)) return "produce";
  return "universal";
}

Instance::Instance(Crn crn, Configuration initial, Configuration target, Problem problem)
    : crn_(std::move(crn)),
      initial_(std::move(initial)),
      target_(std::move(target)),
      problem_(std::move(problem)) {
  if (initial_.size() != crn_.speciesCount()) {
    throw InvalidCrn("initial configuration is not sized to the alphabet");
  }
  if (target_.size() != crn_.speciesCount()) {
    throw InvalidCrn("target configuration is not sized to the alphabet");
  }
  if (const auto* prod = std::get_if<Production>(&problem_)) {
    if (prod->k < 1) throw InvalidCrn("production threshold k must be at least 1");
    if (prod->species >= crn_.speciesCount()) throw InvalidCrn("production species out of range");
  }
}

Instance Instance::withProblem(Problem p) const { return Instance(crn_, initial_, target_, std::move(p)); }

std::string toString(const Count& c) { return c.str(); }

Count parseCount(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty count");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("count must be an unsigned decimal: '" + std::string(digits) + "'");
    }
  }
  return Count(std::string(digits));
}

}  // namespace crnreach

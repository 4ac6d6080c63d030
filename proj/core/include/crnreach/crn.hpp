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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crnreach {

/// Unbounded integer used for every species count, multiplicity and volume.
using Count = boost::multiprecision::cpp_int;

using RuleId = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class IllegalRun : public Error {
 public:
  using Error::Error;
};

class InvalidCrn : public Error {
 public:
  using Error::Error;
};

/// A procedure was invoked outside the class of instances it is correct for.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

struct SpeciesId {
  std::size_t index = 0;
  std::string name;

  friend bool operator==(const SpeciesId&, const SpeciesId&) = default;
};

/// A vector of non-negative species counts.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t species);
  explicit Configuration(std::vector<Count> counts);

  std::size_t size() const { return counts_.size(); }
  const Count& operator[](std::size_t i) const { return counts_[i]; }
  std::span<const Count> counts() const { return counts_; }

  void set(std::size_t i, Count value);
  void add(std::size_t i, const Count& delta);

  bool isZero() const;
  /// Entrywise domination: every entry of this is >= the matching entry of other.
  bool dominates(const Configuration& other) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Count> counts_;
};

Count volume(const Configuration& c);

/// Size-(i,j): reactant volume and product volume.
struct RuleSize {
  Count reactants;
  Count products;

  friend bool operator==(const RuleSize&, const RuleSize&) = default;
};

struct RuleTraits {
  std::vector<Count> applicationVector;
  RuleSize size;
  bool isVoid = false;
  bool isAutogenesis = false;
  std::vector<std::size_t> produced;
  std::vector<std::size_t> consumed;
  std::vector<std::size_t> catalysts;
  Count volumeDelta;
};

/// A sparse (species, amount) term; used for fast inner loops.
struct Term {
  std::size_t species;
  Count amount;
};

class Rule {
 public:
  /// Throws InvalidCrn for mismatched lengths or for the all-zero rule.
  Rule(RuleId id, Configuration reactants, Configuration products);

  RuleId id() const { return id_; }
  const Configuration& reactants() const { return reactants_; }
  const Configuration& products() const { return products_; }
  const RuleTraits& traits() const { return traits_; }

  /// Non-zero reactant entries.
  std::span<const Term> reactantTerms() const { return reactantTerms_; }
  /// Non-zero application-vector entries.
  std::span<const Term> deltaTerms() const { return deltaTerms_; }

  /// Same rule with reactants and products swapped.
  Rule reversed() const;
  Rule withId(RuleId id) const;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.id_ == b.id_ && a.reactants_ == b.reactants_ && a.products_ == b.products_;
  }

 private:
  RuleId id_;
  Configuration reactants_;
  Configuration products_;
  RuleTraits traits_;
  std::vector<Term> reactantTerms_;
  std::vector<Term> deltaTerms_;
};

RuleTraits ruleTraits(const Rule& r);

bool isApplicable(const Configuration& c, const Rule& r);

/// Throws NotApplicable when r cannot fire at c.
Configuration applyOnce(const Configuration& c, const Rule& r);

/// k back-to-back applications of r. Legality is checked at the two endpoint
/// configurations c and c + (k-1)*R_a; each count is affine in the application
/// index so the per-species minimum sits at one of them.
/// Throws IllegalRun if the block cannot occur contiguously.
Configuration applyRun(const Configuration& c, const Rule& r, const Count& k);

/// Non-throwing form of applyRun.
std::optional<Configuration> tryApplyRun(const Configuration& c, const Rule& r, const Count& k);

class Crn {
 public:
  Crn() = default;
  /// Throws InvalidCrn on duplicate/invalid species names, wrongly sized rules
  /// or duplicate rule ids.
  Crn(std::vector<std::string> species, std::vector<Rule> rules);

  std::size_t speciesCount() const { return species_.size(); }
  std::span<const std::string> speciesNames() const { return species_; }
  const std::string& speciesName(std::size_t i) const { return species_[i]; }
  SpeciesId speciesId(std::size_t i) const { return {i, species_[i]}; }
  std::optional<std::size_t> findSpecies(std::string_view name) const;
  /// Throws InvalidCrn if absent.
  std::size_t speciesIndex(std::string_view name) const;

  std::span<const Rule> rules() const { return rules_; }
  std::size_t ruleCount() const { return rules_.size(); }
  /// Position of the rule with the given id, if present.
  std::optional<std::size_t> findRule(RuleId id) const;
  const Rule& ruleById(RuleId id) const;

  /// Builds a configuration from (name, count) pairs; unknown names throw.
  Configuration configuration(std::initializer_list<std::pair<std::string_view, Count>> entries) const;
  Configuration configuration(const std::vector<std::pair<std::string, Count>>& entries) const;
  Configuration zero() const { return Configuration(species_.size()); }

  /// Subset of the rules (same alphabet, ids preserved).
  Crn withRules(std::vector<Rule> rules) const;

  friend bool operator==(const Crn& a, const Crn& b) {
    return a.species_ == b.species_ && a.rules_ == b.rules_;
  }

 private:
  std::vector<std::string> species_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Rule> rules_;
  std::unordered_map<RuleId, std::size_t> rulePos_;
};

/// True iff name matches [A-Za-z][A-Za-z0-9_^*']*.
bool isValidSpeciesName(std::string_view name);

/// Incremental construction of a Crn; species are appended on first use.
class CrnBuilder {
 public:
  using Multiset = std::vector<std::pair<std::string, Count>>;

  std::size_t species(const std::string& name);
  RuleId addRule(const Multiset& reactants, const Multiset& products);
  Crn build() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<Multiset, Multiset>> rules_;
};

struct Reach {
  friend bool operator==(const Reach&, const Reach&) = default;
};
struct Production {
  std::size_t species = 0;
  Count k = 1;
  friend bool operator==(const Production&, const Production&) = default;
};
struct UniversalReach {
  friend bool operator==(const UniversalReach&, const UniversalReach&) = default;
};
using Problem = std::variant<Reach, Production, UniversalReach>;

std::string problemName(const Problem& p);

/// A CRN together with the question asked about it.
class Instance {
 public:
  /// Throws InvalidCrn when sizes disagree or a Production asks for k < 1.
  Instance(Crn crn, Configuration initial, Configuration target, Problem problem = Reach{});

  const Crn& crn() const { return crn_; }
  const Configuration& initial() const { return initial_; }
  /// Unused (all-zero) for Production problems.
  const Configuration& target() const { return target_; }
  const Problem& problem() const { return problem_; }

  Instance withProblem(Problem p) const;

 private:
  Crn crn_;
  Configuration initial_;
  Configuration target_;
  Problem problem_;
};

std::string toString(const Count& c);
/// Throws std::invalid_argument on anything but unsigned decimal digits.
Count parseCount(std::string_view digits);

}  // namespace crnreach

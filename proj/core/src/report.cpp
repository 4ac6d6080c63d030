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

#include "crnreach/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "crnreach/text_format.hpp"

namespace crnreach {

using nlohmann::ordered_json;

std::string digest(std::string_view canonicalText) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonicalText) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string instanceDigest(const Instance& instance) { return digest(formatInstance(instance)); }

namespace {

std::string ruleList(const std::vector<RuleId>& ids) {
  std::string out;
  for (RuleId id : ids) out += (out.empty() ? "" : " ") + std::to_string(id);
  return out;
}

std::string speciesList(const Crn& crn, const std::vector<std::size_t>& ids) {
  std::string out;
  for (std::size_t s : ids) out += (out.empty() ? "" : " ") + crn.speciesName(s);
  return out;
}

ordered_json profileJson(const ClassificationProfile& p, const Crn& crn) {
  ordered_json j;
  j["feed_forward"] = p.isFeedForward();
  j["feed_forward_order"] = p.feedForwardOrder ? ordered_json(*p.feedForwardOrder) : ordered_json(nullptr);
  j["max_source"] = p.maxSource;
  j["max_consuming"] = p.maxConsuming;
  j["has_void"] = p.hasVoid;
  j["has_autogenesis"] = p.hasAutogenesis;
  j["has_catalyst"] = p.hasCatalyst;
  j["rule_size_bound"] = {toString(p.ruleSizeBound.reactants), toString(p.ruleSizeBound.products)};
  j["monotonicity"] = toString(p.monotonicity);
  j["population_protocol"] = p.isPopulationProtocol;
  j["all_unimolecular"] = p.allUnimolecular;
  j["all_void2"] = p.allVoid2;
  if (p.bipartition) {
    std::vector<std::string> a, b;
    for (auto s : p.bipartition->first) a.push_back(crn.speciesName(s));
    for (auto s : p.bipartition->second) b.push_back(crn.speciesName(s));
    j["bipartition"] = {a, b};
  } else {
    j["bipartition"] = nullptr;
  }
  return j;
}

ordered_json decisionJson(const Decision& d) {
  ordered_json j;
  j["verdict"] = toString(d.verdict);
  j["method"] = d.method;
  j["unknown_reason"] = d.unknownReason.empty() ? ordered_json(nullptr) : ordered_json(d.unknownReason);
  j["fallback_from"] = d.fallbackFrom ? ordered_json(*d.fallbackFrom) : ordered_json(nullptr);
  j["warnings"] = d.warnings;
  j["divergences"] = d.divergences;
  if (d.certificate) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : d.certificate->blocks) blocks.push_back({{"rule", b.rule}, {"multiplicity", toString(b.multiplicity)}});
    j["certificate"] = blocks;
  } else {
    j["certificate"] = nullptr;
  }
  if (d.witnessApplications) {
    ordered_json w = ordered_json::object();
    for (const auto& [id, m] : *d.witnessApplications) w[std::to_string(id)] = toString(m);
    j["witness_applications"] = w;
  } else {
    j["witness_applications"] = nullptr;
  }
  if (d.oracle) j["oracle_states"] = d.oracle->statesExplored;
  return j;
}

ordered_json reportJson(const RunReport& r, const Crn& crn) {
  ordered_json j;
  j["format_version"] = 1;
  j["command"] = r.command;
  j["instance_digest"] = r.digest;
  if (!r.problem.empty()) j["problem"] = r.problem;
  j["profile"] = profileJson(r.profile, crn);
  if (r.decision) j["decision"] = decisionJson(*r.decision);
  if (r.certificateValid) j["certificate_valid"] = *r.certificateValid;
  if (r.crossCheck) {
    const auto& o = r.crossCheck->oracle;
    j["cross_check"] = {{"oracle_verdict", toString(o.verdict)},
                        {"oracle_states", o.statesExplored},
                        {"oracle_bound", o.boundHit ? ordered_json(toString(*o.boundHit)) : ordered_json(nullptr)},
                        {"agreement", r.crossCheck->agreement}};
  }
  if (r.elapsedMs) j["elapsed_ms"] = *r.elapsedMs;
  return j;
}

}  // namespace

std::string formatReportStructured(const RunReport& report, const Crn& crn) {
  return reportJson(report, crn).dump(2) + "\n";
}

std::string formatReportsStructured(const std::vector<std::pair<RunReport, Crn>>& reports) {
  ordered_json j;
  j["format_version"] = 1;
  j["reports"] = ordered_json::array();
  for (const auto& [r, crn] : reports) j["reports"].push_back(reportJson(r, crn));
  return j.dump(2) + "\n";
}

std::string formatReportText(const RunReport& r, const Crn& crn) {
  const auto& p = r.profile;
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) { out += key + ": " + value + "\n"; };
  line("command", r.command);
  line("instance", r.digest);
  if (!r.problem.empty()) line("problem", r.problem);
  line("feed-forward", p.isFeedForward() ? "yes (order " + ruleList(*p.feedForwardOrder) + ")" : "no");
  line("source/consuming", std::to_string(p.maxSource) + "-source, " + std::to_string(p.maxConsuming) + "-consuming");
  line("void rules", p.hasVoid ? "yes" : "no");
  line("autogenesis rules", p.hasAutogenesis ? "yes" : "no");
  line("catalysts", p.hasCatalyst ? "yes" : "no");
  line("rule size bound", "(" + toString(p.ruleSizeBound.reactants) + "," + toString(p.ruleSizeBound.products) + ")");
  line("monotonicity", toString(p.monotonicity));
  if (p.allVoid2) {
    line("bipartite", p.bipartition ? "{" + speciesList(crn, p.bipartition->first) + "} | {" +
                                          speciesList(crn, p.bipartition->second) + "}"
                                    : "no");
  }
  if (r.decision) {
    const auto& d = *r.decision;
    line("verdict", toString(d.verdict));
    line("method", d.method);
    if (d.fallbackFrom) line("fallback from", *d.fallbackFrom);
    if (!d.unknownReason.empty()) line("unknown reason", d.unknownReason);
    for (const auto& w : d.warnings) line("warning", w);
    for (const auto& w : d.divergences) line("divergence", w);
    if (d.certificate) {
      std::string blocks;
      for (const auto& b : d.certificate->blocks) {
        blocks += (blocks.empty() ? "" : ", ") + std::to_string(b.rule) + "x" + toString(b.multiplicity);
      }
      line("certificate", blocks.empty() ? "(empty)" : blocks);
    }
  }
  if (r.certificateValid) line("certificate valid", *r.certificateValid ? "yes" : "no");
  if (r.crossCheck) {
    line("oracle verdict", toString(r.crossCheck->oracle.verdict) + " (" +
                               std::to_string(r.crossCheck->oracle.statesExplored) + " states)");
    line("agreement", r.crossCheck->agreement ? "true" : "false");
  }
  if (r.elapsedMs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f ms", *r.elapsedMs);
    line("time", buf);
  }
  return out;
}

}  // namespace crnreach

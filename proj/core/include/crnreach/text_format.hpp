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

#include <map>
#include <string>
#include <string_view>

#include "crnreach/crn.hpp"
#include "crnreach/reductions.hpp"
#include "crnreach/search.hpp"

namespace crnreach {

/// Syntax or validation error at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A CRN file: optional `species:` line, rules, named configurations and an
/// optional `problem:` line.
struct CrnDocument {
  Crn crn;
  std::map<std::string, Configuration> configs;
  std::optional<Problem> problem;
};

CrnDocument parseCrnDocument(std::string_view text);
Crn parseCrn(std::string_view text);
/// Needs `config init`; `config target` is required unless the problem is
/// production. The problem defaults to reach.
Instance parseInstance(std::string_view text);

std::string formatMultiset(const Crn& crn, const Configuration& c);
std::string formatRule(const Crn& crn, const Rule& r);
std::string formatCrn(const Crn& crn);
std::string formatInstance(const Instance& instance);

Digraph parseDigraph(std::string_view text);
std::string formatDigraph(const Digraph& g);

Hypergraph parseHypergraph(std::string_view text);
std::string formatHypergraph(const Hypergraph& h);

Cnf parseDimacs(std::string_view text);
std::string formatDimacs(const Cnf& f);

GadgetSystem parseGadgetSystem(std::string_view text);
std::string formatGadgetSystem(const GadgetSystem& sys);

OrderedCertificate parseCertificate(std::string_view text);
std::string formatCertificate(const OrderedCertificate& cert);

}  // namespace crnreach

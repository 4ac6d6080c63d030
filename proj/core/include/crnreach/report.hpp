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

#include <optional>
#include <string>

#include "crnreach/classify.hpp"
#include "crnreach/solvers.hpp"

namespace crnreach {

/// FNV-1a 64-bit hash of the canonical text, as 16 hex digits.
std::string digest(std::string_view canonicalText);
std::string instanceDigest(const Instance& instance);

struct RunReport {
  std::string command;
  std::string digest;
  std::string problem;
  ClassificationProfile profile;
  std::optional<Decision> decision;
  std::optional<double> elapsedMs;
  std::optional<CrossCheck> crossCheck;
  /// Outcome of verify-cert.
  std::optional<bool> certificateValid;
};

std::string formatReportText(const RunReport& report, const Crn& crn);

/// JSON object with `format_version` 1; large counts are decimal strings.
std::string formatReportStructured(const RunReport& report, const Crn& crn);

/// Several reports as one JSON document (for batch runs).
std::string formatReportsStructured(const std::vector<std::pair<RunReport, Crn>>& reports);

}  // namespace crnreach

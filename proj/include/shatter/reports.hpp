// Copyright 2026 The Shatter Authors
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

#ifndef SHATTER_REPORTS_HPP
#define SHATTER_REPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shatter/constructions.hpp"
#include "shatter/polynomial.hpp"
#include "shatter/projections.hpp"
#include "shatter/set_system.hpp"

namespace shatter {

struct GraphSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool connected = false;
  bool tree = false;
  bool labels_distinct = false;
  std::optional<bool> isometric;  // only for connected graphs
};

struct AnalysisReport {
  int n = 0;
  std::size_t size = 0;
  std::size_t sh_size = 0;
  std::size_t st_size = 0;
  int vc_dim = -1;
  bool extremal_def = false;
  bool extremal_br = false;
  std::optional<bool> extremal_sm;  // n <= 7 only
  bool agree = true;
  GraphSummary graph;
};

// Throws EmptyFamily.
AnalysisReport analyze(const SetSystem& f);

enum class BasisMode {
  kAssembled,  // minimal non-shattered pairs plus field polynomials
  kFull,       // tree reading, every pair of labels
  kAdjacent,   // tree reading, pairs of edges sharing a vertex
};

struct GroebnerReport {
  std::string order;
  BasisMode mode = BasisMode::kAssembled;
  std::vector<Polynomial> basis;
  bool zero_set_is_family = false;
  // Not asserted for the adjacent-pair basis.
  std::optional<bool> buchberger;
  SetFamily standard_monomials;
  bool standard_monomials_are_sh = false;
  bool falsified = false;
};

GroebnerReport groebner_report(const SetSystem& f, const LexOrder& ord, BasisMode mode);

nlohmann::json sets_json(const SetSystem& f);
nlohmann::json masks_json(const std::vector<Mask>& masks);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const GroebnerReport& r);
nlohmann::json to_json(const LiftReport& r);
nlohmann::json to_json(const PeelReport& r);
nlohmann::json to_json(const ScanReport& r);
nlohmann::json to_json(const AnsteeResult& r);

std::string basis_mode_name(BasisMode mode);

}  // namespace shatter

#endif  // SHATTER_REPORTS_HPP

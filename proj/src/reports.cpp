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

#include "shatter/reports.hpp"

#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"
#include "shatter/groebner.hpp"
#include "shatter/inclusion_graph.hpp"
#include "shatter/standard_monomials.hpp"
#include "shatter/transforms.hpp"

namespace shatter {

AnalysisReport analyze(const SetSystem& f) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, "cannot analyze an empty family");
  AnalysisReport r;
  r.n = f.ground_size();
  r.size = f.size();
  const SetFamily sh = shattered_family(f);
  r.sh_size = sh.size();
  r.st_size = strongly_shattered(f).size();
  r.vc_dim = vc_dimension(f);
  r.extremal_def = sh.size() == f.size();
  r.extremal_br = is_extremal_br(f);
  if (r.n <= kMaxExactOrderSize) r.extremal_sm = extremality_via_sm_exact(f);
  r.agree = r.extremal_def == r.extremal_br && r.extremal_sm.value_or(r.extremal_def) == r.extremal_def;

  const auto g = build_inclusion_graph(f);
  r.graph.vertices = g.vertex_count();
  r.graph.edges = g.edges.size();
  r.graph.connected = g.is_connected();
  r.graph.tree = g.is_tree();
  r.graph.labels_distinct = g.labels_distinct();
  if (r.graph.connected) r.graph.isometric = is_isometric_in_cube(f).isometric;
  return r;
}

GroebnerReport groebner_report(const SetSystem& f, const LexOrder& ord, BasisMode mode) {
  GroebnerReport r;
  r.order = to_string(ord);
  r.mode = mode;
  switch (mode) {
    case BasisMode::kAssembled:
      r.basis = assemble_groebner_basis(f);
      break;
    case BasisMode::kFull:
      r.basis = vc1_basis_from_tree(f, Vc1BasisMode::kFull);
      break;
    case BasisMode::kAdjacent:
      r.basis = vc1_basis_from_tree(f, Vc1BasisMode::kAdjacentOnly);
      break;
  }
  r.zero_set_is_family = common_zero_set(r.basis, f.ground_size()) == f;
  if (mode != BasisMode::kAdjacent) r.buchberger = buchberger_check(r.basis, ord);
  r.standard_monomials = standard_monomials(f, ord);
  r.standard_monomials_are_sh = r.standard_monomials == shattered_family(f);
  r.falsified = !r.zero_set_is_family || !r.buchberger.value_or(true) || !r.standard_monomials_are_sh;
  return r;
}

std::string basis_mode_name(BasisMode mode) {
  switch (mode) {
    case BasisMode::kAssembled:
      return "assembled";
    case BasisMode::kFull:
      return "full";
    case BasisMode::kAdjacent:
      return "adjacent";
  }
  return "?";
}

nlohmann::json sets_json(const SetSystem& f) { return masks_json(f.masks()); }

nlohmann::json masks_json(const std::vector<Mask>& masks) {
  nlohmann::json out = nlohmann::json::array();
  for (Mask m : masks) out.push_back(elements_of(m));
  return out;
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json graph = {
      {"vertices", r.graph.vertices}, {"edges", r.graph.edges},
      {"connected", r.graph.connected}, {"tree", r.graph.tree},
      {"labels_distinct", r.graph.labels_distinct},
  };
  graph["isometric"] = r.graph.isometric ? nlohmann::json(*r.graph.isometric) : nlohmann::json(nullptr);
  return {
      {"n", r.n},
      {"size", r.size},
      {"sh_size", r.sh_size},
      {"st_size", r.st_size},
      {"vc_dim", r.vc_dim},
      {"extremal",
       {{"definition", r.extremal_def},
        {"bollobas_radcliffe", r.extremal_br},
        {"standard_monomials", r.extremal_sm ? nlohmann::json(*r.extremal_sm) : nlohmann::json(nullptr)},
        {"agree", r.agree}}},
      {"graph", graph},
  };
}

nlohmann::json to_json(const GroebnerReport& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& p : r.basis) basis.push_back(to_string(p));
  nlohmann::json sm = nlohmann::json::array();
  for (Mask m : r.standard_monomials) sm.push_back(to_string(Monomial::square_free(m)));
  return {
      {"order", r.order},
      {"mode", basis_mode_name(r.mode)},
      {"basis", basis},
      {"zero_set_is_family", r.zero_set_is_family},
      {"buchberger", r.buchberger ? nlohmann::json(*r.buchberger) : nlohmann::json(nullptr)},
      {"standard_monomials", sm},
      {"standard_monomials_are_sh", r.standard_monomials_are_sh},
      {"falsified", r.falsified},
  };
}

nlohmann::json to_json(const LiftReport& r) {
  return {
      {"t", r.t},
      {"window", r.window},
      {"standard_setting", r.standard_setting},
      {"projections_extremal", r.projections_extremal},
      {"input_extremal", r.input_extremal},
      {"lifted", sets_json(r.lifted)},
      {"contains_input", r.contains_input},
      {"lifted_extremal", r.lifted_extremal},
      {"lifted_vcdim", r.lifted_vcdim},
      {"equality_when_extremal",
       r.equality_when_extremal ? nlohmann::json(*r.equality_when_extremal) : nlohmann::json(nullptr)},
      {"falsified", r.falsified},
  };
}

nlohmann::json to_json(const PeelReport& r) {
  nlohmann::json eliminated = nlohmann::json::array();
  for (const auto& step : r.eliminated_shattered) eliminated.push_back(masks_json(step));
  nlohmann::json out = {
      {"input_size", r.input.size()},
      {"order", masks_json(r.order)},
      {"extremal_after_each", r.extremal_after_each},
      {"failure_index", r.failure_index ? nlohmann::json(*r.failure_index) : nlohmann::json(nullptr)},
      {"eliminated_shattered", eliminated},
      {"stuck", r.stuck ? sets_json(*r.stuck) : nlohmann::json(nullptr)},
      {"complete", r.complete()},
  };
  if (!r.index_sets.empty()) out["index_sets"] = masks_json(r.index_sets);
  return out;
}

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json examples = nlohmann::json::array();
  for (const auto& f : r.examples) examples.push_back(sets_json(f));
  return {
      {"n", r.n},
      {"mode", r.exhaustive ? "exhaustive" : "random"},
      {"seed", r.seed},
      {"families_scanned", r.families_scanned},
      {"extremal_families", r.extremal_families},
      {"removable_found", r.removable_found},
      {"addable_found", r.addable_found},
      {"counterexamples", r.counterexamples},
      {"duality_mismatches", r.duality_mismatches},
      {"examples", examples},
  };
}

nlohmann::json to_json(const AnsteeResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    steps.push_back({
        {"level", s.level},
        {"a", elements_of(s.a)},
        {"b", elements_of(s.b)},
        {"added", elements_of(s.added)},
        {"new_shattered", masks_json(s.new_shattered)},
    });
  }
  return {{"n", r.family.ground_size()}, {"sets", sets_json(r.family)}, {"steps", steps}};
}

}  // namespace shatter

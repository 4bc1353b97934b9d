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

#ifndef SHATTER_FORMATS_HPP
#define SHATTER_FORMATS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "shatter/inclusion_graph.hpp"
#include "shatter/set_system.hpp"

namespace shatter {

// Set-system text format:
//   # comment
//   n=5
//   1,5
//   -
// One set per line, elements comma-separated, `-` for the empty set. Without
// an `n=` header the ground set is [max element] (at least [1]). Duplicate
// sets, repeated elements and elements outside [n] are parse errors.
SetSystem parse_ss(std::string_view text);
std::string emit_ss(const SetSystem& f);

// {"n": 5, "sets": [[1,5],[2],[]]}
SetSystem parse_family_json(std::string_view text);
std::string emit_family_json(const SetSystem& f);

// JSON when the first non-blank character is `{`, the text format otherwise.
SetSystem parse_family(std::string_view text);

// Tree format: vertex count on the first line, then `u v label` per edge,
// vertices 0-indexed, edge directed u -> v. `#` comments allowed.
LabeledTree parse_tree(std::string_view text);
std::string emit_tree(const LabeledTree& t);

std::string graph_to_dot(const LabeledInclusionGraph& g);
std::string tree_to_dot(const LabeledTree& t);

// Reads a whole file; throws Parse on I/O failure.
std::string read_file(const std::string& path);

}  // namespace shatter

#endif  // SHATTER_FORMATS_HPP

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

#ifndef SHATTER_INCLUSION_GRAPH_HPP
#define SHATTER_INCLUSION_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "shatter/set_system.hpp"

namespace shatter {

// Directed edge from -> to carrying an element label in [n].
struct LabeledEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int label = 0;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Labelled Hasse diagram of a family. Vertex k is family[k]; an edge g -> f
// labelled j exists exactly when f = g ∪ {j}, j ∉ g.
struct LabeledInclusionGraph {
  SetSystem family;
  std::vector<LabeledEdge> edges;  // sorted by (from, label)

  std::size_t vertex_count() const { return family.size(); }
  // Undirected adjacency lists (neighbour indices).
  std::vector<std::vector<std::size_t>> adjacency() const;
  bool is_connected() const;
  bool is_tree() const;
  bool labels_distinct() const;
};

// Directed tree on anonymous vertices 0..vertex_count-1 whose edges carry
// pairwise distinct labels.
struct LabeledTree {
  std::size_t vertex_count = 1;
  std::vector<LabeledEdge> edges;

  // Throws InvalidTree if the edges do not form a tree with distinct labels.
  void validate() const;
  int max_label() const;
};

// Label-preserving isomorphism. Labels are distinct, so each vertex is
// pinned down by its incident (label, direction) pairs and the edge
// correspondence is forced.
bool equivalent(const LabeledTree& a, const LabeledTree& b);

LabeledInclusionGraph build_inclusion_graph(const SetSystem& f);

// True iff G_F is a tree with distinct labels, i.e. F is s-extremal with
// VC-dim <= 1. Throws EmptyFamily.
bool classify_vc1_extremal(const SetSystem& f);

struct IsometryResult {
  bool isometric = true;
  // A pair whose graph distance exceeds their Hamming distance.
  std::optional<std::pair<Mask, Mask>> witness;
};

// Compares BFS distance in the undirected G_F with |F △ G| for every pair.
// Throws EmptyFamily, Disconnected.
IsometryResult is_isometric_in_cube(const SetSystem& f);

// Labels go to every vertex on the head side of their edge. `n` defaults to
// max(1, largest label). Throws InvalidTree.
SetSystem decode_tree(const LabeledTree& t, int n = 0);

// Inverse of decode_tree for VC-dim <= 1 extremal families with full support
// and empty common intersection. Vertex k of the tree is family member k.
// Throws PreconditionViolated naming the failed clause.
LabeledTree encode_family(const SetSystem& f);

// Streams every s-extremal family on [n] of VC-dim <= 1 with support [n] and
// empty common intersection, each exactly once. Returns the count.
// Requires 1 <= n <= 6 (GroundSetTooLarge beyond).
std::uint64_t enumerate_vc1_extremal(int n, const std::function<void(const SetSystem&)>& sink);
std::vector<SetSystem> enumerate_vc1_extremal(int n);

// 2^n (n+1)^(n-2): the closed-form count the enumeration must reproduce.
std::uint64_t vc1_extremal_count_formula(int n);

enum class BipartitionClass {
  kContainingVertex0,
  kOther,
};

// Two-colours the undirected tree, directs every edge away from the chosen
// class and decodes. The result lies in layers k and k-1, k = |chosen class|.
SetSystem two_layer_from_tree(const LabeledTree& t, BipartitionClass cls, int n = 0);

}  // namespace shatter

#endif  // SHATTER_INCLUSION_GRAPH_HPP

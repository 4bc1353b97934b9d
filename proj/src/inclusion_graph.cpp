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

#include "shatter/inclusion_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"

namespace shatter {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<std::size_t>> undirected_adjacency(std::size_t vertex_count,
                                                           const std::vector<LabeledEdge>& edges) {
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  return adj;
}

std::vector<int> bfs_distances(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<std::size_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

// Vertex masks produced by a valid tree: vertex w receives label s for every
// edge u -> v (label s) with w on v's side.
std::vector<Mask> decode_vertices(const LabeledTree& t) {
  const std::size_t m = t.vertex_count;
  auto adj = undirected_adjacency(m, t.edges);

  // Root at 0; tin/tout intervals identify subtrees.
  std::vector<std::size_t> parent(m, m), tin(m), tout(m);
  std::size_t clock = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  parent[0] = 0;
  tin[0] = clock++;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    if (next < adj[u].size()) {
      const std::size_t v = adj[u][next++];
      if (v == parent[u]) continue;
      parent[v] = u;
      tin[v] = clock++;
      stack.emplace_back(v, 0);
    } else {
      tout[u] = clock;
      stack.pop_back();
    }
  }
  auto in_subtree = [&](std::size_t root, std::size_t w) { return tin[root] <= tin[w] && tin[w] < tout[root]; };

  std::vector<Mask> masks(m, 0);
  for (const auto& e : t.edges) {
    const Mask bit = element_bit(e.label);
    // The child endpoint's subtree is one side of the edge.
    const bool head_is_child = parent[e.to] == e.from;
    const std::size_t child = head_is_child ? e.to : e.from;
    for (std::size_t w = 0; w < m; ++w) {
      if (in_subtree(child, w) == head_is_child) masks[w] |= bit;
    }
  }
  return masks;
}

void fail_precondition(const std::string& clause) {
  fail(ErrorCode::kPreconditionViolated, "encode_family precondition failed: " + clause);
}

}  // namespace

std::vector<std::vector<std::size_t>> LabeledInclusionGraph::adjacency() const {
  return undirected_adjacency(vertex_count(), edges);
}

bool LabeledInclusionGraph::is_connected() const {
  if (vertex_count() == 0) return false;
  DisjointSets ds(vertex_count());
  std::size_t components = vertex_count();
  for (const auto& e : edges) {
    if (ds.unite(e.from, e.to)) --components;
  }
  return components == 1;
}

bool LabeledInclusionGraph::is_tree() const {
  return is_connected() && edges.size() + 1 == vertex_count();
}

bool LabeledInclusionGraph::labels_distinct() const {
  Mask seen = 0;
  for (const auto& e : edges) {
    const Mask bit = element_bit(e.label);
    if ((seen & bit) != 0) return false;
    seen |= bit;
  }
  return true;
}

void LabeledTree::validate() const {
  if (vertex_count == 0) fail(ErrorCode::kInvalidTree, "tree needs at least one vertex");
  if (edges.size() + 1 != vertex_count) {
    fail(ErrorCode::kInvalidTree, "a tree on " + std::to_string(vertex_count) + " vertices has " +
                                      std::to_string(vertex_count - 1) + " edges, got " +
                                      std::to_string(edges.size()));
  }
  DisjointSets ds(vertex_count);
  Mask seen = 0;
  for (const auto& e : edges) {
    if (e.from >= vertex_count || e.to >= vertex_count) {
      fail(ErrorCode::kInvalidTree, "edge endpoint out of range");
    }
    if (e.label < 1 || e.label > kMaxGroundSize) {
      fail(ErrorCode::kInvalidTree, "edge label " + std::to_string(e.label) + " out of range");
    }
    const Mask bit = element_bit(e.label);
    if ((seen & bit) != 0) fail(ErrorCode::kInvalidTree, "repeated label " + std::to_string(e.label));
    seen |= bit;
    if (!ds.unite(e.from, e.to)) fail(ErrorCode::kInvalidTree, "edges contain a cycle");
  }
}

int LabeledTree::max_label() const {
  int best = 0;
  for (const auto& e : edges) best = std::max(best, e.label);
  return best;
}

bool equivalent(const LabeledTree& a, const LabeledTree& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  auto signatures = [](const LabeledTree& t) {
    std::vector<std::vector<int>> sig(t.vertex_count);
    for (const auto& e : t.edges) {
      sig[e.from].push_back(e.label);   // tail
      sig[e.to].push_back(-e.label);    // head
    }
    for (auto& s : sig) std::sort(s.begin(), s.end());
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  return signatures(a) == signatures(b);
}

LabeledInclusionGraph build_inclusion_graph(const SetSystem& f) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, "inclusion graph of an empty family");
  LabeledInclusionGraph g{f, {}};
  const int n = f.ground_size();
  for (std::size_t from = 0; from < f.size(); ++from) {
    const Mask base = f[from];
    for (int j = 1; j <= n; ++j) {
      const Mask bit = element_bit(j);
      if ((base & bit) != 0) continue;
      const auto to = f.index_of(base | bit);
      if (to >= 0) g.edges.push_back({from, static_cast<std::size_t>(to), j});
    }
  }
  return g;
}

bool classify_vc1_extremal(const SetSystem& f) {
  const auto g = build_inclusion_graph(f);
  return g.is_tree() && g.labels_distinct();
}

IsometryResult is_isometric_in_cube(const SetSystem& f) {
  const auto g = build_inclusion_graph(f);
  if (!g.is_connected()) fail(ErrorCode::kDisconnected, "inclusion graph is not connected");
  const auto adj = g.adjacency();
  for (std::size_t s = 0; s < f.size(); ++s) {
    const auto dist = bfs_distances(adj, s);
    for (std::size_t v = s + 1; v < f.size(); ++v) {
      if (dist[v] != popcount(f[s] ^ f[v])) {
        return IsometryResult{false, std::make_pair(f[s], f[v])};
      }
    }
  }
  return {};
}

SetSystem decode_tree(const LabeledTree& t, int n) {
  t.validate();
  const int max_label = t.max_label();
  if (n == 0) n = std::max(1, max_label);
  check_ground_size(n);
  if (max_label > n) {
    fail(ErrorCode::kInvalidTree,
         "label " + std::to_string(max_label) + " exceeds ground set size " + std::to_string(n));
  }
  return SetSystem(n, decode_vertices(t));
}

LabeledTree encode_family(const SetSystem& f) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, "cannot encode an empty family");
  const auto g = build_inclusion_graph(f);
  if (!g.is_tree()) fail_precondition("inclusion graph is not a tree");
  if (!g.labels_distinct()) fail_precondition("edge labels are not distinct");
  if (support(f) != universe(f.ground_size())) fail_precondition("support is not [n]");
  if (common_intersection(f) != 0) fail_precondition("common intersection is not empty");
  return LabeledTree{f.size(), g.edges};
}

std::uint64_t vc1_extremal_count_formula(int n) {
  if (n < 1) fail(ErrorCode::kParameterOutOfRange, "n must be positive");
  if (n == 1) return 1;
  std::uint64_t count = std::uint64_t{1} << n;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n + 1);
  return count;
}

std::uint64_t enumerate_vc1_extremal(int n, const std::function<void(const SetSystem&)>& sink) {
  if (n < 1) fail(ErrorCode::kParameterOutOfRange, "n must be positive");
  if (n > 6) fail(ErrorCode::kGroundSetTooLarge, "enumeration is limited to n <= 6");

  const std::size_t vertices = static_cast<std::size_t>(n) + 1;
  const std::size_t seq_len = vertices - 2;
  std::vector<std::size_t> seq(seq_len, 0);

  struct VectorHash {
    std::size_t operator()(const std::vector<Mask>& v) const { return boost::hash_range(v.begin(), v.end()); }
  };
  std::unordered_set<std::vector<Mask>, VectorHash> seen;
  std::uint64_t emitted = 0;

  // Vertex-labelled trees on {0..n} come from Prüfer sequences. Rooting at 0
  // and labelling each edge by its child vertex turns one into an
  // edge-labelled tree; every edge-labelled tree arises from n+1 roots, so
  // the decoded families are deduplicated by canonical form.
  while (true) {
    std::vector<std::size_t> degree(vertices, 1);
    for (std::size_t x : seq) ++degree[x];
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
    for (std::size_t x : seq) {
      for (std::size_t leaf = 0; leaf < vertices; ++leaf) {
        if (degree[leaf] == 1) {
          tree_edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
      }
    }
    std::size_t u = vertices, w = vertices;
    for (std::size_t v = 0; v < vertices; ++v) {
      if (degree[v] == 1) (u == vertices ? u : w) = v;
    }
    tree_edges.emplace_back(u, w);

    // Parent pointers from root 0.
    std::vector<std::vector<std::size_t>> adj(vertices);
    for (auto [a, b] : tree_edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<std::size_t> parent(vertices, vertices), order{0};
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t v : adj[order[i]]) {
        if (parent[v] == vertices) {
          parent[v] = order[i];
          order.push_back(v);
        }
      }
    }
    // in_sub[v] = vertex bitset of the subtree hanging below vertex v.
    std::vector<std::uint32_t> in_sub(vertices, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      in_sub[*it] |= std::uint32_t{1} << *it;
      if (*it != 0) in_sub[parent[*it]] |= in_sub[*it];
    }

    for (std::uint32_t orient = 0; orient < (std::uint32_t{1} << n); ++orient) {
      std::vector<Mask> masks(vertices, 0);
      for (int v = 1; v <= n; ++v) {
        const bool downward = ((orient >> (v - 1)) & 1U) != 0;  // parent -> v
        for (std::size_t x = 0; x < vertices; ++x) {
          const bool below = ((in_sub[static_cast<std::size_t>(v)] >> x) & 1U) != 0;
          if (below == downward) masks[x] |= element_bit(v);
        }
      }
      std::sort(masks.begin(), masks.end());
      if (seen.insert(masks).second) {
        ++emitted;
        if (sink) sink(SetSystem(n, masks));
      }
    }

    // Next Prüfer sequence (odometer).
    std::size_t pos = 0;
    while (pos < seq_len && seq[pos] == vertices - 1) seq[pos++] = 0;
    if (pos == seq_len) break;
    ++seq[pos];
  }
  return emitted;
}

std::vector<SetSystem> enumerate_vc1_extremal(int n) {
  std::vector<SetSystem> out;
  enumerate_vc1_extremal(n, [&](const SetSystem& f) { out.push_back(f); });
  return out;
}

SetSystem two_layer_from_tree(const LabeledTree& t, BipartitionClass cls, int n) {
  t.validate();
  const auto adj = undirected_adjacency(t.vertex_count, t.edges);
  const auto dist = bfs_distances(adj, 0);
  const int chosen_parity = cls == BipartitionClass::kContainingVertex0 ? 0 : 1;
  LabeledTree directed{t.vertex_count, {}};
  for (const auto& e : t.edges) {
    const bool from_chosen = (dist[e.from] % 2) == chosen_parity;
    directed.edges.push_back(from_chosen ? e : LabeledEdge{e.to, e.from, e.label});
  }
  return decode_tree(directed, n);
}

}  // namespace shatter

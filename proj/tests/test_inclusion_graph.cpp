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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"
#include "shatter/inclusion_graph.hpp"
#include "shatter/sampling.hpp"

namespace shatter {
namespace {

SetSystem ft() { return SetSystem::of(5, {{1, 5}, {1, 2, 5}, {2, 5}, {2, 4, 5}, {2, 3, 4, 5}, {2}}); }

// The pictured tree, vertices listed in the order of ft()'s literal above.
LabeledTree ft_tree() {
  LabeledTree t;
  t.vertex_count = 6;
  t.edges = {{0, 1, 2}, {2, 1, 1}, {2, 3, 4}, {3, 4, 3}, {5, 2, 5}};
  return t;
}

TEST(InclusionGraphTest, Examples) {
  const auto g = build_inclusion_graph(SetSystem::of(1, {{}, {1}}));
  ASSERT_EQ(g.edges.size(), 1U);
  EXPECT_EQ(g.edges[0], (LabeledEdge{0, 1, 1}));

  const auto t = build_inclusion_graph(ft());
  EXPECT_EQ(t.edges.size(), 5U);
  EXPECT_TRUE(t.is_tree());
  EXPECT_TRUE(t.labels_distinct());
  std::set<int> labels;
  for (const auto& e : t.edges) labels.insert(e.label);
  EXPECT_EQ(labels, (std::set<int>{1, 2, 3, 4, 5}));

  EXPECT_TRUE(build_inclusion_graph(SetSystem::of(2, {{}, {1, 2}})).edges.empty());
  EXPECT_THROW(build_inclusion_graph(SetSystem(2)), Error);
}

TEST(InclusionGraphTest, EdgesMatchHammingOracle) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_family(2 + trial % 6, 0.5, rng);
    if (f.empty()) continue;
    const auto g = build_inclusion_graph(f);
    ASSERT_EQ(g.edges.size(), oracle::hamming_edges(f));
    for (const auto& e : g.edges) ASSERT_EQ(f[e.to], f[e.from] | element_bit(e.label));
    ASSERT_EQ(g.is_connected(), oracle::connected(f));
  }
}

TEST(ClassifyVc1Test, Examples) {
  EXPECT_TRUE(classify_vc1_extremal(ft()));
  EXPECT_FALSE(classify_vc1_extremal(SetSystem::full_cube(2)));
}

TEST(ClassifyVc1Test, AgreesWithDefinitionExhaustivelyAtN4) {
  oracle::for_each_family(4, [](const SetSystem& f) {
    const bool expected = is_extremal(f) && vc_dimension(f) <= 1;
    ASSERT_EQ(classify_vc1_extremal(f), expected) << to_string(f);
    // Extremal families have connected inclusion graphs.
    if (is_extremal(f)) ASSERT_TRUE(build_inclusion_graph(f).is_connected());
  });
}

TEST(IsometryTest, Examples) {
  EXPECT_TRUE(is_isometric_in_cube(ft()).isometric);
  EXPECT_TRUE(is_isometric_in_cube(SetSystem::of(2, {{}, {1}, {1, 2}})).isometric);
  // {1} and {3} differ in two places but are four steps apart in the graph.
  const auto detour = SetSystem::of(3, {{1}, {1, 2}, {1, 2, 3}, {2, 3}, {3}});
  const auto r = is_isometric_in_cube(detour);
  EXPECT_FALSE(r.isometric);
  ASSERT_TRUE(r.witness.has_value());
  const auto [a, b] = *r.witness;
  EXPECT_TRUE(detour.contains(a) && detour.contains(b));
  EXPECT_GE(popcount(a ^ b), 1);
  // The hexagon around the missing {1,2} is isometric.
  EXPECT_TRUE(is_isometric_in_cube(SetSystem::of(3, {{}, {1}, {1, 3}, {1, 2, 3}, {2, 3}, {2}})).isometric);
  EXPECT_THROW(is_isometric_in_cube(SetSystem::of(2, {{}, {1, 2}})), Error);
}

TEST(IsometryTest, MatchesBfsOracle) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_family(2 + trial % 5, 0.7, rng);
    if (f.empty() || !oracle::connected(f)) continue;
    bool expected = true;
    for (std::size_t u = 0; u < f.size(); ++u) {
      const auto d = oracle::hamming_bfs(f, u);
      for (std::size_t v = 0; v < f.size(); ++v) expected = expected && d[v] == popcount(f[u] ^ f[v]);
    }
    ASSERT_EQ(is_isometric_in_cube(f).isometric, expected) << to_string(f);
  }
}

TEST(DecodeTreeTest, Examples) {
  EXPECT_EQ(decode_tree(ft_tree()), ft());
  LabeledTree single;
  EXPECT_EQ(decode_tree(single, 1), SetSystem(1, {0}));
  LabeledTree edge;
  edge.vertex_count = 2;
  edge.edges = {{0, 1, 1}};
  EXPECT_EQ(decode_tree(edge), SetSystem::of(1, {{}, {1}}));
}

TEST(DecodeTreeTest, RejectsInvalidTrees) {
  LabeledTree repeated;
  repeated.vertex_count = 3;
  repeated.edges = {{0, 1, 1}, {1, 2, 1}};
  EXPECT_THROW(decode_tree(repeated), Error);
  LabeledTree cycle;
  cycle.vertex_count = 3;
  cycle.edges = {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}};
  EXPECT_THROW(decode_tree(cycle), Error);
  LabeledTree disconnected;
  disconnected.vertex_count = 4;
  disconnected.edges = {{0, 1, 1}, {2, 3, 2}};
  EXPECT_THROW(decode_tree(disconnected), Error);
}

TEST(EncodeFamilyTest, Examples) {
  EXPECT_TRUE(equivalent(encode_family(ft()), ft_tree()));
  const auto t = encode_family(SetSystem::of(1, {{}, {1}}));
  ASSERT_EQ(t.edges.size(), 1U);
  EXPECT_EQ(t.edges[0].label, 1);
  EXPECT_THROW(encode_family(SetSystem::full_cube(2)), Error);
  // Full support fails.
  EXPECT_THROW(encode_family(SetSystem::of(3, {{}, {1}})), Error);
  // Nonempty common intersection fails.
  EXPECT_THROW(encode_family(SetSystem::of(2, {{2}, {1, 2}})), Error);
}

TEST(EnumerateTest, CountsMatchFormula) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<Mask>> seen;
    const auto count = enumerate_vc1_extremal(n, [&](const SetSystem& f) {
      ASSERT_TRUE(seen.insert(f.masks()).second) << "duplicate " << to_string(f);
      ASSERT_EQ(f.size(), static_cast<std::size_t>(n) + 1);
    });
    EXPECT_EQ(count, vc1_extremal_count_formula(n)) << "n=" << n;
  }
  EXPECT_EQ(vc1_extremal_count_formula(2), 4U);
  EXPECT_EQ(vc1_extremal_count_formula(3), 32U);
  EXPECT_EQ(vc1_extremal_count_formula(4), 400U);
  EXPECT_THROW(enumerate_vc1_extremal(7), Error);
  EXPECT_THROW(enumerate_vc1_extremal(0), Error);
}

TEST(EnumerateTest, MatchesBruteForceFilter) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<Mask>> expected;
    oracle::for_each_family(n, [&](const SetSystem& f) {
      if (oracle::vc1_full(f)) expected.insert(f.masks());
    });
    std::set<std::vector<Mask>> got;
    for (const auto& f : enumerate_vc1_extremal(n)) got.insert(f.masks());
    EXPECT_EQ(got, expected) << "n=" << n;
  }
  const auto n2 = enumerate_vc1_extremal(2);
  ASSERT_EQ(n2.size(), 4U);
  for (const auto& f : n2) EXPECT_EQ(f.size(), 3U);
}

TEST(EnumerateTest, MatchesBruteForceFilterAtN4) {
  // Only the 5-member subfamilies of 2^[4] can qualify.
  std::set<std::vector<Mask>> expected;
  for (std::uint32_t code = 0; code < (1U << 16); ++code) {
    if (std::popcount(code) != 5) continue;
    std::vector<Mask> members;
    for (Mask m = 0; m < 16; ++m) {
      if ((code >> m) & 1U) members.push_back(m);
    }
    const SetSystem f(4, members);
    if (oracle::vc1_full(f)) expected.insert(f.masks());
  }
  std::set<std::vector<Mask>> got;
  for (const auto& f : enumerate_vc1_extremal(4)) got.insert(f.masks());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.size(), 400U);
}

TEST(CodecTest, RoundTripsOnEnumeratedFamilies) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& f : enumerate_vc1_extremal(n)) {
      const auto t = encode_family(f);
      ASSERT_EQ(decode_tree(t, n), f);
      ASSERT_TRUE(equivalent(encode_family(decode_tree(t, n)), t));
      ASSERT_TRUE(is_extremal(f));
      ASSERT_LE(vc_dimension(f), 1);
      ASSERT_EQ(build_inclusion_graph(f).edges.size(), static_cast<std::size_t>(n));
    }
  }
}

TEST(CodecTest, DecodedTreeGraphIsTheTree) {
  const auto f = decode_tree(ft_tree());
  const auto g = build_inclusion_graph(f);
  LabeledTree from_graph;
  from_graph.vertex_count = g.vertex_count();
  from_graph.edges = g.edges;
  EXPECT_TRUE(equivalent(from_graph, ft_tree()));
}

TEST(TwoLayerTest, PathAndStar) {
  LabeledTree path;
  path.vertex_count = 3;
  path.edges = {{0, 1, 1}, {1, 2, 2}};
  // Class containing vertex 0 is {0, 2}; the other class is the middle vertex.
  const auto middle = two_layer_from_tree(path, BipartitionClass::kOther);
  EXPECT_EQ(middle, SetSystem::of(2, {{}, {1}, {2}}));
  const auto ends = two_layer_from_tree(path, BipartitionClass::kContainingVertex0);
  EXPECT_EQ(ends, SetSystem::of(2, {{1}, {2}, {1, 2}}));
  EXPECT_EQ(ends, dual_family(middle));

  LabeledTree star;
  star.vertex_count = 5;
  star.edges = {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {0, 4, 4}};
  const auto down_star = two_layer_from_tree(star, BipartitionClass::kContainingVertex0);
  EXPECT_EQ(down_star, SetSystem::of(4, {{}, {1}, {2}, {3}, {4}}));
}

TEST(TwoLayerTest, LayersAndDualityOnRandomTrees) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : enumerate_vc1_extremal(n)) {
      const auto t = encode_family(f);
      const auto a = two_layer_from_tree(t, BipartitionClass::kContainingVertex0, n);
      const auto b = two_layer_from_tree(t, BipartitionClass::kOther, n);
      ASSERT_TRUE(is_extremal(a));
      ASSERT_TRUE(is_extremal(b));
      ASSERT_EQ(b, dual_family(a));
      ASSERT_EQ(a.size(), t.vertex_count);
      // Two-colour the tree; k = size of vertex 0's class.
      std::vector<int> colour(t.vertex_count, -1);
      colour[0] = 0;
      for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : t.edges) {
          if (colour[e.from] >= 0 && colour[e.to] < 0) colour[e.to] = 1 - colour[e.from], changed = true;
          if (colour[e.to] >= 0 && colour[e.from] < 0) colour[e.from] = 1 - colour[e.to], changed = true;
        }
      }
      const int k = static_cast<int>(std::count(colour.begin(), colour.end(), 0));
      for (Mask m : a) ASSERT_TRUE(popcount(m) == k || popcount(m) == k - 1) << to_string(a) << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace shatter

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

#include "oracles.hpp"
#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"
#include "shatter/inclusion_graph.hpp"
#include "shatter/sampling.hpp"
#include "shatter/transforms.hpp"

namespace shatter {
namespace {

SetSystem ft() { return SetSystem::of(5, {{1, 5}, {1, 2, 5}, {2, 5}, {2, 4, 5}, {2, 3, 4, 5}, {2}}); }

TEST(BitFlipTest, Examples) {
  EXPECT_EQ(bit_flip(SetSystem::of(1, {{}, {1}}), 1), SetSystem::of(1, {{}, {1}}));
  EXPECT_EQ(bit_flip(SetSystem::of(2, {{1, 2}}), 1), SetSystem::of(2, {{2}}));
  EXPECT_THROW(bit_flip(ft(), 6), Error);
  EXPECT_THROW(bit_flip(ft(), 0), Error);
}

TEST(BitFlipTest, ReversesOnlyEdgesWithThatLabel) {
  const auto f = ft();
  for (int i = 1; i <= 5; ++i) {
    const auto g = bit_flip(f, i);
    const auto before = build_inclusion_graph(f);
    const auto after = build_inclusion_graph(g);
    ASSERT_EQ(before.edges.size(), after.edges.size());
    for (const auto& e : before.edges) {
      Mask from = f[e.from], to = f[e.to];
      if (e.label == i) std::swap(from, to);
      const Mask bit = element_bit(i);
      from ^= bit;
      to ^= bit;
      const bool found = std::any_of(after.edges.begin(), after.edges.end(), [&](const LabeledEdge& x) {
        return g[x.from] == from && g[x.to] == to && x.label == e.label;
      });
      ASSERT_TRUE(found) << "label " << e.label << " after flipping " << i;
    }
  }
}

TEST(HalvesTest, Examples) {
  const auto [a0, a1] = halves(SetSystem::of(1, {{}, {1}}), 1);
  EXPECT_EQ(a0, SetSystem(1, {0}));
  EXPECT_EQ(a1, SetSystem(1, {0}));

  const auto [f0, f1] = halves(ft(), 5);
  EXPECT_EQ(f0, SetSystem::of(5, {{2}}));
  EXPECT_EQ(f1, SetSystem::of(5, {{1}, {1, 2}, {2}, {2, 4}, {2, 3, 4}}));

  const auto [c0, c1] = halves(SetSystem::full_cube(2), 2);
  EXPECT_EQ(c0, SetSystem::of(2, {{}, {1}}));
  EXPECT_EQ(c1, SetSystem::of(2, {{}, {1}}));
}

TEST(DownshiftTest, Examples) {
  EXPECT_EQ(downshift(SetSystem::of(1, {{1}}), 1), SetSystem(1, {0}));
  EXPECT_EQ(downshift(SetSystem::of(1, {{}, {1}}), 1), SetSystem::of(1, {{}, {1}}));
  EXPECT_EQ(downshift(SetSystem::of(2, {{1}, {1, 2}, {2}}), 1), SetSystem::of(2, {{}, {1, 2}, {2}}));
}

TEST(MeetJoinTest, Examples) {
  EXPECT_EQ(meet_family(SetSystem::of(1, {{}, {1}}), 1), SetSystem(1, {0}));
  EXPECT_EQ(join_family(SetSystem::of(1, {{}, {1}}), 1), SetSystem(1, {0}));
  EXPECT_TRUE(meet_family(SetSystem::of(2, {{}, {2}}), 1).empty());
  EXPECT_EQ(join_family(SetSystem::of(2, {{}, {2}}), 1), SetSystem::of(2, {{}, {2}}));
}

TEST(CubeFiberTest, Examples) {
  EXPECT_EQ(cube_fiber_family(ft(), 0), ft());
  EXPECT_EQ(cube_fiber_family(SetSystem::full_cube(2), mask_of({1})), SetSystem::of(2, {{}, {2}}));
  EXPECT_TRUE(cube_fiber_family(SetSystem::of(2, {{}, {1}, {2}}), mask_of({1, 2})).empty());
  EXPECT_THROW(cube_fiber_family(ft(), mask_of({6})), Error);
}

TEST(BollobasRadcliffeTest, Examples) {
  EXPECT_TRUE(is_extremal_br(ft()));
  EXPECT_FALSE(is_extremal_br(SetSystem::of(2, {{1}, {2}})));
  EXPECT_THROW(is_extremal_br(SetSystem(2)), Error);
}

TEST(TransformInvariantsTest, ExhaustiveAtN4) {
  oracle::for_each_family(4, [](const SetSystem& f) {
    const bool extremal = is_extremal(f);
    ASSERT_EQ(is_extremal_br(f), extremal) << to_string(f);
    const auto sh = shattered_family(f);
    for (int i = 1; i <= 4; ++i) {
      const auto d = downshift(f, i);
      ASSERT_EQ(d, oracle::downshift(f, i));
      ASSERT_EQ(d.size(), f.size());
      ASSERT_EQ(shattered_family(bit_flip(f, i)), sh);
      const auto [f0, f1] = halves(f, i);
      ASSERT_EQ(f0.size() + f1.size(), f.size());
      const auto m = meet_family(f, i);
      const auto u = join_family(f, i);
      const auto [d0, d1] = halves(d, i);
      ASSERT_EQ(m, d1);
      ASSERT_EQ(u, d0);
      if (!extremal) continue;
      ASSERT_TRUE(is_extremal(d));
      ASSERT_TRUE(is_extremal(u));
      if (!m.empty()) ASSERT_TRUE(is_extremal(m));
      if (!f0.empty()) ASSERT_TRUE(is_extremal(f0));
      if (!f1.empty()) ASSERT_TRUE(is_extremal(f1));
      ASSERT_TRUE(is_extremal(bit_flip(f, i)));
    }
    if (!extremal) return;
    for (Mask b = 0; b < 16; ++b) {
      const auto fb = cube_fiber_family(f, b);
      if (!fb.empty()) ASSERT_TRUE(is_extremal(fb));
    }
  });
}

TEST(TransformInvariantsTest, FiberIsIteratedMeet) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const auto f = random_family(n, 0.6, rng);
    for (Mask b = 0; b <= universe(n); ++b) {
      SetSystem iterated = f;
      for (int i : elements_of(b)) iterated = meet_family(iterated, i);
      ASSERT_EQ(cube_fiber_family(f, b), iterated);
    }
  }
}

TEST(TransformInvariantsTest, ExtremalityPreservedRandomUpToN8) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + trial % 4;
    const auto f = random_extremal_family(n, 1 + rng() % (std::size_t{1} << n), rng);
    ASSERT_TRUE(is_extremal(f));
    for (int i = 1; i <= n; ++i) {
      ASSERT_TRUE(is_extremal(downshift(f, i)));
      ASSERT_TRUE(is_extremal(join_family(f, i)));
      const auto m = meet_family(f, i);
      if (!m.empty()) ASSERT_TRUE(is_extremal(m));
      ASSERT_TRUE(is_extremal(bit_flip(f, i)));
    }
  }
}

}  // namespace
}  // namespace shatter

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
#include "shatter/projections.hpp"
#include "shatter/sampling.hpp"

namespace shatter {
namespace {

SetSystem ft() { return SetSystem::of(5, {{1, 5}, {1, 2, 5}, {2, 5}, {2, 4, 5}, {2, 3, 4, 5}, {2}}); }

// Extremal family of VC-dimension exactly t.
SetSystem extremal_with_vc(int n, int t, Rng& rng) {
  while (true) {
    const auto f = random_extremal_family(n, 1 + rng() % (std::size_t{1} << n), rng, t);
    if (vc_dimension(f) == t) return f;
  }
}

TEST(LiftTest, Examples) {
  EXPECT_EQ(lift(ft(), 1), ft());
  EXPECT_TRUE(all_projections_extremal(ft(), 1));
  const auto r = verify_lift(ft(), 1);
  EXPECT_TRUE(r.standard_setting);
  EXPECT_TRUE(r.projections_extremal);
  EXPECT_TRUE(r.lifted_extremal);
  EXPECT_EQ(r.lifted_vcdim, 1);
  ASSERT_TRUE(r.equality_when_extremal.has_value());
  EXPECT_TRUE(*r.equality_when_extremal);
  EXPECT_FALSE(r.falsified);
}

TEST(LiftTest, Errors) {
  EXPECT_THROW(lift(ft(), 0), Error);
  EXPECT_THROW(lift(ft(), 3), Error);
  EXPECT_THROW(all_projections_extremal(ft(), 2), Error);
  EXPECT_THROW(lift(ft(), 1, {false, 6}), Error);
  EXPECT_THROW(all_projections_extremal(SetSystem::full_cube(3), 1), Error);
  EXPECT_NO_THROW(all_projections_extremal(SetSystem::of(3, {{}}), 1, {true, 0}));
}

TEST(LiftTest, MatchesOracleAndIsIdempotent) {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 5;
    const int w = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto f = random_family(n, 0.4, rng);
    if (f.empty()) continue;
    const LiftOptions opts{true, w};
    const auto g = lift(f, 1, opts);
    ASSERT_EQ(g.masks(), oracle::lift(f, w)) << to_string(f) << " w=" << w;
    for (Mask m : f) ASSERT_TRUE(g.contains(m));
    ASSERT_EQ(lift(g, 1, opts), g);
  }
}

TEST(LiftTest, ExtremalFamiliesAreFixed) {
  Rng rng(32);
  const std::pair<int, int> settings[] = {{5, 1}, {7, 1}, {5, 2}, {6, 2}};
  for (const auto& [n, t] : settings) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = extremal_with_vc(n, t, rng);
      const auto r = verify_lift(f, t);
      ASSERT_TRUE(r.projections_extremal) << to_string(f);
      ASSERT_EQ(r.lifted, f) << to_string(f);
      ASSERT_FALSE(r.falsified);
    }
  }
}

TEST(LiftTest, ConclusionsHoldOnHypothesisFamilies) {
  Rng rng(33);
  const std::pair<int, int> settings[] = {{5, 1}, {6, 1}, {5, 2}};
  int checked = 0;
  for (int trial = 0; trial < 600 && checked < 60; ++trial) {
    const auto [n, t] = settings[trial % 3];
    auto f = extremal_with_vc(n, t, rng);
    // Delete members at random; keep the ones still meeting the hypothesis.
    std::vector<Mask> kept;
    for (Mask m : f) {
      if (rng() % 3 != 0) kept.push_back(m);
    }
    if (kept.empty()) continue;
    const SetSystem g(n, kept);
    if (vc_dimension(g) != t || !all_projections_extremal(g, t)) continue;
    ++checked;
    const auto r = verify_lift(g, t);
    ASSERT_TRUE(r.contains_input);
    ASSERT_TRUE(r.lifted_extremal) << to_string(g);
    ASSERT_EQ(r.lifted_vcdim, t);
    ASSERT_FALSE(r.falsified);
    ASSERT_EQ(r.lifted.masks(), oracle::lift(g, 2 * t + 1));
  }
  EXPECT_GT(checked, 0);
}

TEST(LiftTest, RelaxedReportsWithoutAsserting) {
  // Two antipodal points: VC 1, not extremal, and its 3-windows are not all extremal.
  const auto f = SetSystem::of(3, {{}, {1, 2, 3}});
  const auto r = verify_lift(f, 1);
  EXPECT_FALSE(r.projections_extremal);
  EXPECT_FALSE(r.falsified);
  const auto relaxed = verify_lift(f, 1, {true, 2});
  EXPECT_FALSE(relaxed.standard_setting);
  EXPECT_FALSE(relaxed.falsified);
}

}  // namespace
}  // namespace shatter

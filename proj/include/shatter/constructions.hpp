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

#ifndef SHATTER_CONSTRUCTIONS_HPP
#define SHATTER_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "shatter/set_system.hpp"

namespace shatter {

// Closed under taking subsets.
bool is_down_set(const SetSystem& f);
// Smallest down-set containing F.
SetSystem down_closure(const SetSystem& f);

enum class TreeStrategy {
  kDeterministicMin,  // BFS from the smallest mask, neighbours in mask order
  kSeededRandom,      // Kruskal over a seeded shuffle of the level edges
};

struct AnsteeStep {
  int level = 0;  // k: A and B are (k-1)-sets, A ∪ B is a k-set
  Mask a = 0;
  Mask b = 0;
  Mask added = 0;
  std::vector<Mask> new_shattered;  // Sh(F + A∪B) \ Sh(F)
};

struct AnsteeResult {
  SetSystem family;
  std::vector<AnsteeStep> steps;
};

// Triangle-free extremal family of size C(n,0)+C(n,1)+C(n,2): start from
// layers 0 and 1; at each level join the endpoints of every edge of a spanning
// tree of the graph on the current (k-1)-sets with |A △ B| = 2.
// Requires n >= 2 (ParameterOutOfRange). Throws DisconnectedLevelGraph if a
// level graph is disconnected.
AnsteeResult anstee_construct(int n, TreeStrategy strategy = TreeStrategy::kDeterministicMin,
                              std::uint64_t seed = 0);

// True iff no t-subset X has all of its l-subsets among the traces F|_X.
// Requires n >= t >= l >= 0 (ParameterOutOfRange).
bool forbidden_trace_check(const SetSystem& f, int t, int l);

struct FqMember {
  Mask index = 0;  // X = {x_1 < ... < x_i}
  Mask set = 0;    // E(X)
};

struct FqFamily {
  SetSystem family;
  std::vector<FqMember> members;  // in peel order, largest first
};

// E(X) for X = {x_1 < ... < x_i}:
//   i < l:  X itself;
//   l = 0:  [n] \ X;
//   else:   {x_1..x_l} ∪ ({x > x_l} \ {x_{l+1}..x_i}).
Mask fq_e_value(int n, int l, Mask x);

// All E(X) with |X| <= t-1, so |F(n,t,l)| = sum_{i<t} C(n,i).
// Requires n >= t >= l >= 0 and t >= 1 (ParameterOutOfRange); throws
// DuplicateEValue if two index sets collide.
FqFamily furedi_quinn(int n, int t, int l);

// E(X) ≻ E(Y) when |X| > |Y|, or |X| = |Y| and the least element of X △ Y
// lies in X (so {1,4} ≻ {2,3}).
bool fq_index_greater(Mask x, Mask y);

struct PeelReport {
  SetSystem input;
  std::vector<Mask> order;
  std::vector<bool> extremal_after_each;
  std::optional<std::size_t> failure_index;
  // Sh(before) \ Sh(after) for each removal.
  std::vector<std::vector<Mask>> eliminated_shattered;
  // Füredi–Quinn peels only: the index set X of each removed E(X).
  std::vector<Mask> index_sets;
  // Greedy peels only: the family left when no member could be removed.
  std::optional<SetSystem> stuck;

  bool complete() const { return !failure_index && !stuck && order.size() == input.size(); }
};

// Removes the members of F(n,t,l) from the largest down, recording each step.
PeelReport fq_peel(int n, int t, int l);

// First member (in mask order) whose removal leaves F extremal. The empty
// family counts as extremal, so a single-member family always peels.
// Throws EmptyFamily, NotExtremal.
std::optional<Mask> find_removable(const SetSystem& f);

// First set outside F (in mask order) whose addition keeps F extremal.
// Throws EmptyFamily, NotExtremal.
std::optional<Mask> find_addable(const SetSystem& f);

// Repeated find_removable until the family is empty or stuck.
// Throws NotExtremal.
PeelReport peel_sequence(const SetSystem& f);

struct ScanOptions {
  bool exhaustive = true;
  std::uint64_t random_count = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  // At most this many counterexamples are kept in the report.
  std::size_t max_examples = 16;
};

struct ScanReport {
  int n = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t families_scanned = 0;
  std::uint64_t extremal_families = 0;
  std::uint64_t removable_found = 0;
  std::uint64_t addable_found = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t duality_mismatches = 0;
  std::vector<SetSystem> examples;

  bool falsified() const { return counterexamples != 0 || duality_mismatches != 0; }
};

// For each extremal F with |F| >= 2: looks for a removable member, and
// independently for an addable member of the complement family (the two must
// agree). Exhaustive mode visits every nonempty family and needs n <= 4
// (GroundSetTooLarge); random mode draws random extremal families.
ScanReport conjecture_scan(int n, const ScanOptions& opts);

}  // namespace shatter

#endif  // SHATTER_CONSTRUCTIONS_HPP

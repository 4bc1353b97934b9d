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

#ifndef SHATTER_CORE_SETS_HPP
#define SHATTER_CORE_SETS_HPP

#include <vector>

#include "shatter/set_system.hpp"

namespace shatter {

// Sh(F): every S such that each subset of S occurs as a trace F ∩ S.
// Computed by splitting on the highest element,
//   Sh(F) = Sh(F0) ∪ Sh(F1) ∪ {S + n : S ∈ Sh(F0) ∩ Sh(F1)},
// memoized on identical subfamilies. Sh(∅) = ∅.
SetFamily shattered_family(const SetSystem& f);

// st(F): every I with some B disjoint from I such that B + 2^I ⊆ F.
SetFamily strongly_shattered(const SetSystem& f);

// Largest shattered set size; -1 for the empty family.
int vc_dimension(const SetSystem& f);

// |Sh(F)| == |F|. Throws EmptyFamily.
bool is_extremal(const SetSystem& f);

// Same test but defined on the empty family too (Sh(∅) = ∅, so it counts as
// extremal). Used by peeling, where the last step empties the family.
bool is_extremal_or_empty(const SetSystem& f);

// Raw traces {F ∩ X}, kept on the original ground set [n].
SetSystem trace(const SetSystem& f, Mask x);

struct Projection {
  SetSystem family;           // on ground set [|X|]
  std::vector<int> elements;  // elements[k] = original element mapped to k+1
};

// F|_X re-indexed to [|X|] through the order-preserving map from X.
// Throws InvalidGroundSubset unless X ⊆ [n].
Projection projection(const SetSystem& f, Mask x);

// 2^[n] \ F.
SetSystem complement_family(const SetSystem& f);
// {[n] \ F : F ∈ F}.
SetSystem dual_family(const SetSystem& f);

// Union / intersection of all members. Throw EmptyFamily.
Mask support(const SetSystem& f);
Mask common_intersection(const SetSystem& f);

// For F inside layers k-t+1..k: checks VC-dim(F) <= t-1. A false return means
// the bound failed on an extremal input. Throws LayerViolation, NotExtremal.
bool consecutive_layers_vc_check(const SetSystem& f, int k, int t);

}  // namespace shatter

#endif  // SHATTER_CORE_SETS_HPP

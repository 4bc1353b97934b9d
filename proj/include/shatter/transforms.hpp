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

#ifndef SHATTER_TRANSFORMS_HPP
#define SHATTER_TRANSFORMS_HPP

#include <utility>

#include "shatter/set_system.hpp"

namespace shatter {

// Every operator below takes a 1-based element i and throws ElementOutOfRange
// unless 1 <= i <= n. Results stay on the ground set [n].

// XOR of element i on every member. An involution that preserves Sh(F).
SetSystem bit_flip(const SetSystem& f, int i);

struct Halves {
  SetSystem without;  // F0: members avoiding i
  SetSystem with;     // F1: {F \ {i} : i ∈ F ∈ F}
};
Halves halves(const SetSystem& f, int i);

// D_i(F) = {F \ {i} : F ∈ F} ∪ {F : i ∈ F, F \ {i} ∈ F}.
SetSystem downshift(const SetSystem& f, int i);

// M_i(F) = F0 ∩ F1 and U_i(F) = F0 ∪ F1.
SetSystem meet_family(const SetSystem& f, int i);
SetSystem join_family(const SetSystem& f, int i);

// F(B) = {I ⊆ [n] \ B : I + 2^B ⊆ F}; F(∅) = F.
SetSystem cube_fiber_family(const SetSystem& f, Mask b);

// Bollobás–Radcliffe test: the inclusion graph of F(B) is connected for every
// B with F(B) nonempty (an empty F(B) imposes nothing). Throws EmptyFamily.
bool is_extremal_br(const SetSystem& f);

}  // namespace shatter

#endif  // SHATTER_TRANSFORMS_HPP

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

#ifndef SHATTER_PROJECTIONS_HPP
#define SHATTER_PROJECTIONS_HPP

#include <optional>

#include "shatter/set_system.hpp"

namespace shatter {

struct LiftOptions {
  // Accept VC-dim(F) <= t instead of requiring equality.
  bool relaxed = false;
  // Window size; 0 means 2t+1. Any other value marks the run as experimental.
  int window = 0;
};

struct LiftReport {
  int t = 0;
  int window = 0;
  // False when relaxed or when the window differs from 2t+1; the lift's
  // conclusions are then reported but not asserted.
  bool standard_setting = true;
  bool projections_extremal = false;
  bool input_extremal = false;
  SetSystem lifted;
  bool contains_input = false;
  bool lifted_extremal = false;
  int lifted_vcdim = -1;
  // Set only when the input is extremal: whether the lift returned F itself.
  std::optional<bool> equality_when_extremal;
  // Some asserted conclusion failed.
  bool falsified = false;
};

// F|_X is s-extremal for every X of size 2t+1 (raw traces, no re-indexing).
// Requires 1 <= t and 2t+1 <= n (ParameterOutOfRange) and VC-dim(F) = t
// (VcMismatch; <= t when relaxed).
bool all_projections_extremal(const SetSystem& f, int t, const LiftOptions& opts = {});

// G = {H ⊆ [n] : H ∩ X ∈ F|_X for every X of the window size}, by a full cube
// scan against per-window trace sets. F ⊆ G always.
SetSystem lift(const SetSystem& f, int t, const LiftOptions& opts = {});

// Runs the hypothesis check and, when it holds, every conclusion.
LiftReport verify_lift(const SetSystem& f, int t, const LiftOptions& opts = {});

}  // namespace shatter

#endif  // SHATTER_PROJECTIONS_HPP

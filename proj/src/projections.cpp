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

#include "shatter/projections.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"

namespace shatter {
namespace {

int window_size(const SetSystem& f, int t, const LiftOptions& opts) {
  const int n = f.ground_size();
  if (t < 1) fail(ErrorCode::kParameterOutOfRange, "t must be at least 1");
  const int w = opts.window == 0 ? 2 * t + 1 : opts.window;
  if (w < 1 || w > n) {
    fail(ErrorCode::kParameterOutOfRange,
         "window size " + std::to_string(w) + " does not fit ground set of size " + std::to_string(n));
  }
  return w;
}

void check_vc(const SetSystem& f, int t, const LiftOptions& opts) {
  const int vc = vc_dimension(f);
  if (opts.relaxed ? vc > t : vc != t) {
    fail(ErrorCode::kVcMismatch, "family has VC-dimension " + std::to_string(vc) +
                                     (opts.relaxed ? ", expected at most " : ", expected ") + std::to_string(t));
  }
}

// All masks of popcount w below 2^n (Gosper's hack).
std::vector<Mask> windows(int n, int w) {
  std::vector<Mask> out;
  if (w == 0) return {0};
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << w) - 1; x < limit;) {
    out.push_back(static_cast<Mask>(x));
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

}  // namespace

bool all_projections_extremal(const SetSystem& f, int t, const LiftOptions& opts) {
  const int w = window_size(f, t, opts);
  check_vc(f, t, opts);
  for (Mask x : windows(f.ground_size(), w)) {
    if (!is_extremal(trace(f, x))) return false;
  }
  return true;
}

SetSystem lift(const SetSystem& f, int t, const LiftOptions& opts) {
  const int n = f.ground_size();
  const int w = window_size(f, t, opts);
  const auto xs = windows(n, w);
  std::vector<std::unordered_set<Mask>> traces(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (Mask m : f) traces[k].insert(m & xs[k]);
  }
  std::vector<Mask> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t h = 0; h < total; ++h) {
    const Mask hm = static_cast<Mask>(h);
    bool inside = true;
    for (std::size_t k = 0; k < xs.size() && inside; ++k) inside = traces[k].contains(hm & xs[k]);
    if (inside) out.push_back(hm);
  }
  return SetSystem(n, std::move(out));
}

LiftReport verify_lift(const SetSystem& f, int t, const LiftOptions& opts) {
  LiftReport r;
  r.t = t;
  r.window = window_size(f, t, opts);
  r.standard_setting = !opts.relaxed && r.window == 2 * t + 1;
  r.projections_extremal = all_projections_extremal(f, t, opts);
  r.input_extremal = !f.empty() && is_extremal(f);
  r.lifted = lift(f, t, opts);
  r.contains_input = std::all_of(f.begin(), f.end(), [&](Mask m) { return r.lifted.contains(m); });
  r.lifted_extremal = !r.lifted.empty() && is_extremal(r.lifted);
  r.lifted_vcdim = vc_dimension(r.lifted);
  if (r.input_extremal) r.equality_when_extremal = (r.lifted == f);

  if (!r.contains_input) r.falsified = true;
  if (r.standard_setting && r.projections_extremal) {
    if (!r.lifted_extremal || r.lifted_vcdim != t) r.falsified = true;
    if (r.equality_when_extremal.has_value() && !*r.equality_when_extremal) r.falsified = true;
  }
  return r;
}

}  // namespace shatter

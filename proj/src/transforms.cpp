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

#include "shatter/transforms.hpp"

#include <algorithm>
#include <iterator>

#include "shatter/errors.hpp"
#include "shatter/inclusion_graph.hpp"

namespace shatter {

SetSystem bit_flip(const SetSystem& f, int i) {
  check_element(f.ground_size(), i);
  const Mask bit = element_bit(i);
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f) out.push_back(m ^ bit);
  return SetSystem(f.ground_size(), std::move(out));
}

Halves halves(const SetSystem& f, int i) {
  check_element(f.ground_size(), i);
  const Mask bit = element_bit(i);
  std::vector<Mask> without, with;
  for (Mask m : f) {
    if ((m & bit) != 0) {
      with.push_back(m & ~bit);
    } else {
      without.push_back(m);
    }
  }
  return Halves{SetSystem(f.ground_size(), std::move(without)),
                SetSystem(f.ground_size(), std::move(with))};
}

SetSystem downshift(const SetSystem& f, int i) {
  check_element(f.ground_size(), i);
  const Mask bit = element_bit(i);
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f) {
    if ((m & bit) != 0 && !f.contains(m & ~bit)) {
      out.push_back(m & ~bit);
    } else {
      out.push_back(m);
    }
  }
  return SetSystem(f.ground_size(), std::move(out));
}

SetSystem meet_family(const SetSystem& f, int i) {
  auto [without, with] = halves(f, i);
  std::vector<Mask> out;
  std::set_intersection(without.begin(), without.end(), with.begin(), with.end(),
                        std::back_inserter(out));
  return SetSystem(f.ground_size(), std::move(out));
}

SetSystem join_family(const SetSystem& f, int i) {
  auto [without, with] = halves(f, i);
  std::vector<Mask> out;
  std::set_union(without.begin(), without.end(), with.begin(), with.end(), std::back_inserter(out));
  return SetSystem(f.ground_size(), std::move(out));
}

SetSystem cube_fiber_family(const SetSystem& f, Mask b) {
  if ((b & ~universe(f.ground_size())) != 0) {
    fail(ErrorCode::kInvalidGroundSubset, format_set(b) + " is not a subset of the ground set");
  }
  std::vector<Mask> out;
  for (Mask base : f) {
    if ((base & b) != 0) continue;
    bool full = true;
    for (Mask h = b; h != 0; h = (h - 1) & b) {
      if (!f.contains(base | h)) {
        full = false;
        break;
      }
    }
    if (full) out.push_back(base);
  }
  return SetSystem(f.ground_size(), std::move(out));
}

bool is_extremal_br(const SetSystem& f) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, "is_extremal_br requires a nonempty family");
  const Mask all = universe(f.ground_size());
  for (Mask b = 0;; ++b) {
    const SetSystem fiber = cube_fiber_family(f, b);
    if (!fiber.empty() && !build_inclusion_graph(fiber).is_connected()) return false;
    if (b == all) break;
  }
  return true;
}

}  // namespace shatter

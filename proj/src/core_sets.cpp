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

#include "shatter/core_sets.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <span>
#include <string>

#include "shatter/errors.hpp"

namespace shatter {
namespace {

// S is shattered iff F has 2^|S| distinct traces on S.
bool shatters(std::span<const Mask> fam, Mask s, std::vector<Mask>& scratch) {
  const std::size_t need = std::size_t{1} << popcount(s);
  if (fam.size() < need) return false;
  scratch.clear();
  for (Mask m : fam) scratch.push_back(m & s);
  std::sort(scratch.begin(), scratch.end());
  return static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin()) == need;
}

void require_nonempty(const SetSystem& f, const char* what) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, std::string(what) + " requires a nonempty family");
}

}  // namespace

SetFamily shattered_family(const SetSystem& f) {
  const int n = f.ground_size();
  if (f.empty()) return SetFamily(n);

  // Sh(F) is downward closed: grow it by size, testing a candidate only when
  // every one-smaller subset is already shattered.
  std::vector<Mask> found{0};
  std::vector<Mask> frontier{0};
  std::vector<Mask> scratch;
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask s : frontier) {
      // Each candidate arises once: from itself minus its largest element.
      const int start = s == 0 ? 1 : (32 - std::countl_zero(s)) + 1;
      for (int e = start; e <= n; ++e) {
        const Mask c = s | element_bit(e);
        bool divisors_ok = true;
        for (Mask rest = s; rest != 0 && divisors_ok; rest &= rest - 1) {
          const Mask bit = rest & (~rest + 1);
          divisors_ok = std::binary_search(frontier.begin(), frontier.end(), c & ~bit);
        }
        if (divisors_ok && shatters(f.members(), c, scratch)) next.push_back(c);
      }
    }
    std::sort(next.begin(), next.end());
    found.insert(found.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return SetFamily(n, std::move(found));
}

SetFamily strongly_shattered(const SetSystem& f) {
  const int n = f.ground_size();
  if (f.empty()) return SetFamily(n);

  // st(F) is downward closed, so grow it one element at a time: a candidate I
  // is only tested once every I \ {i} is already known to be strongly shattered.
  auto has_cube = [&](Mask i_set) {
    for (Mask base : f) {
      if ((base & i_set) != 0) continue;
      bool full = true;
      for (Mask h = i_set; h != 0; h = (h - 1) & i_set) {
        if (!f.contains(base | h)) {
          full = false;
          break;
        }
      }
      if (full) return true;
    }
    return false;
  };

  std::vector<Mask> found{0};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mask> candidates;
    // Each candidate arises once: from itself minus its largest element.
    for (Mask s : frontier) {
      const int start = s == 0 ? 1 : (32 - std::countl_zero(s)) + 1;
      for (int e = start; e <= n; ++e) candidates.push_back(s | element_bit(e));
    }

    std::vector<Mask> next;
    std::sort(found.begin(), found.end());
    for (Mask c : candidates) {
      bool divisors_ok = true;
      for (Mask rest = c; rest != 0; rest &= rest - 1) {
        const Mask bit = rest & (~rest + 1);
        if (!std::binary_search(found.begin(), found.end(), c & ~bit)) {
          divisors_ok = false;
          break;
        }
      }
      if (divisors_ok && has_cube(c)) next.push_back(c);
    }
    found.insert(found.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return SetFamily(n, std::move(found));
}

int vc_dimension(const SetSystem& f) {
  if (f.empty()) return -1;
  int best = 0;
  for (Mask s : shattered_family(f)) best = std::max(best, popcount(s));
  return best;
}

bool is_extremal(const SetSystem& f) {
  require_nonempty(f, "is_extremal");
  return shattered_family(f).size() == f.size();
}

bool is_extremal_or_empty(const SetSystem& f) {
  return f.empty() || shattered_family(f).size() == f.size();
}

SetSystem trace(const SetSystem& f, Mask x) {
  if ((x & ~universe(f.ground_size())) != 0) {
    fail(ErrorCode::kInvalidGroundSubset, format_set(x) + " is not a subset of the ground set");
  }
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f) out.push_back(m & x);
  return SetSystem(f.ground_size(), std::move(out));
}

Projection projection(const SetSystem& f, Mask x) {
  SetSystem raw = trace(f, x);
  std::vector<int> elements = elements_of(x);
  std::vector<Mask> reindexed;
  reindexed.reserve(raw.size());
  for (Mask m : raw) {
    Mask r = 0;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if ((m & element_bit(elements[k])) != 0) r |= Mask{1} << k;
    }
    reindexed.push_back(r);
  }
  return Projection{SetSystem(static_cast<int>(elements.size()), std::move(reindexed)),
                    std::move(elements)};
}

SetSystem complement_family(const SetSystem& f) {
  const int n = f.ground_size();
  std::vector<Mask> out;
  const std::size_t total = std::size_t{1} << n;
  out.reserve(total - f.size());
  auto it = f.begin();
  for (std::size_t i = 0; i < total; ++i) {
    const Mask m = static_cast<Mask>(i);
    if (it != f.end() && *it == m) {
      ++it;
    } else {
      out.push_back(m);
    }
  }
  return SetSystem(n, std::move(out));
}

SetSystem dual_family(const SetSystem& f) {
  const Mask all = universe(f.ground_size());
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f) out.push_back(all & ~m);
  return SetSystem(f.ground_size(), std::move(out));
}

Mask support(const SetSystem& f) {
  require_nonempty(f, "support");
  Mask u = 0;
  for (Mask m : f) u |= m;
  return u;
}

Mask common_intersection(const SetSystem& f) {
  require_nonempty(f, "common_intersection");
  Mask c = universe(f.ground_size());
  for (Mask m : f) c &= m;
  return c;
}

bool consecutive_layers_vc_check(const SetSystem& f, int k, int t) {
  if (t < 1 || k < t - 1 || k > f.ground_size()) {
    fail(ErrorCode::kParameterOutOfRange, "need 1 <= t, t-1 <= k <= n");
  }
  for (Mask m : f) {
    const int size = popcount(m);
    if (size < k - t + 1 || size > k) {
      fail(ErrorCode::kLayerViolation, format_set(m) + " lies outside layers " +
                                           std::to_string(k - t + 1) + ".." + std::to_string(k));
    }
  }
  if (!is_extremal(f)) fail(ErrorCode::kNotExtremal, "family is not s-extremal");
  return vc_dimension(f) <= t - 1;
}

}  // namespace shatter

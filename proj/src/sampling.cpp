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

#include "shatter/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"

namespace shatter {

SetSystem random_family(int n, double density, Rng& rng) {
  check_ground_size(n);
  if (!(density >= 0.0 && density <= 1.0)) fail(ErrorCode::kParameterOutOfRange, "density must lie in [0,1]");
  std::bernoulli_distribution coin(density);
  std::vector<Mask> members;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (coin(rng)) members.push_back(static_cast<Mask>(m));
  }
  return SetSystem(n, std::move(members));
}

SetSystem random_extremal_family(int n, std::size_t target_size, Rng& rng, int max_vc) {
  check_ground_size(n);
  if (max_vc < 0) max_vc = n;
  const std::size_t total = std::size_t{1} << n;
  target_size = std::clamp<std::size_t>(target_size, 1, total);

  std::uniform_int_distribution<Mask> pick(0, static_cast<Mask>(total - 1));
  SetSystem f(n, {pick(rng)});
  std::vector<Mask> frontier;
  while (f.size() < target_size) {
    // Extremal families have connected inclusion graphs, so growth only
    // needs Hamming neighbours of current members.
    frontier.clear();
    for (Mask m : f) {
      for (int i = 1; i <= n; ++i) {
        const Mask c = m ^ element_bit(i);
        if (!f.contains(c)) frontier.push_back(c);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    std::shuffle(frontier.begin(), frontier.end(), rng);

    bool grown = false;
    for (Mask c : frontier) {
      SetSystem next = f.with(c);
      const SetFamily sh = shattered_family(next);
      if (sh.size() != next.size()) continue;
      if (std::any_of(sh.begin(), sh.end(), [&](Mask s) { return popcount(s) > max_vc; })) continue;
      f = std::move(next);
      grown = true;
      break;
    }
    if (!grown) break;
  }
  return f;
}

LexOrder random_lex_order(int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return LexOrder(std::move(perm));
}

std::vector<LexOrder> random_lex_orders(int n, std::size_t count, Rng& rng) {
  std::vector<LexOrder> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_lex_order(n, rng));
  return out;
}

}  // namespace shatter

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

#ifndef SHATTER_SAMPLING_HPP
#define SHATTER_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "shatter/polynomial.hpp"
#include "shatter/set_system.hpp"

namespace shatter {

using Rng = std::mt19937_64;

// Each subset of [n] joins independently with probability `density`.
SetSystem random_family(int n, double density, Rng& rng);

// Random s-extremal family of VC-dim <= max_vc (defaults to n) with about
// `target_size` members, grown one set at a time from a random single set
// while every intermediate family stays extremal.
SetSystem random_extremal_family(int n, std::size_t target_size, Rng& rng, int max_vc = -1);

// Uniform random permutations of [n].
LexOrder random_lex_order(int n, Rng& rng);
std::vector<LexOrder> random_lex_orders(int n, std::size_t count, Rng& rng);

}  // namespace shatter

#endif  // SHATTER_SAMPLING_HPP

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

#ifndef SHATTER_STANDARD_MONOMIALS_HPP
#define SHATTER_STANDARD_MONOMIALS_HPP

#include <span>
#include <vector>

#include "shatter/polynomial.hpp"
#include "shatter/set_system.hpp"

namespace shatter {

// Largest ground set for which the exact all-orders variants run (n! orders).
inline constexpr int kMaxExactOrderSize = 7;

enum class SmMethod {
  // Greedy scan of square-free monomials in increasing order, keeping those
  // whose evaluation vectors on F stay linearly independent over Q.
  kGreedy,
  // Split on the most significant variable x:
  //   Sm(F) = Sm(U_x(F)) ∪ x·Sm(M_x(F)).
  kRecursive,
};

// Standard monomials of the vanishing ideal I(F) under `ord`, returned as the
// family of their variable sets. Always |result| = |F| and downward closed.
// Throws EmptyFamily.
SetFamily standard_monomials(const SetSystem& f, const LexOrder& ord,
                             SmMethod method = SmMethod::kGreedy);

// Every permutation of [n] in lexicographic order. Throws GroundSetTooLarge
// for n > kMaxExactOrderSize.
std::vector<LexOrder> all_lex_orders(int n);

// True iff Sm(F) is the same for every order given. With a sample of orders
// this is one-sided: false proves non-extremality, true does not prove it.
bool extremality_via_sm(const SetSystem& f, std::span<const LexOrder> orders,
                        SmMethod method = SmMethod::kRecursive);
// Over all n! orders, trying the identity and its reverse first.
bool extremality_via_sm_exact(const SetSystem& f, SmMethod method = SmMethod::kRecursive);

// Union of Sm(F) over the given orders; equals Sh(F) over all orders.
SetFamily sh_via_sm_union(const SetSystem& f, std::span<const LexOrder> orders,
                          SmMethod method = SmMethod::kRecursive);
SetFamily sh_via_sm_union_exact(const SetSystem& f, SmMethod method = SmMethod::kRecursive);

}  // namespace shatter

#endif  // SHATTER_STANDARD_MONOMIALS_HPP

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

#ifndef SHATTER_GROEBNER_HPP
#define SHATTER_GROEBNER_HPP

#include <span>
#include <vector>

#include "shatter/polynomial.hpp"
#include "shatter/set_system.hpp"

namespace shatter {

// A minimal non-shattered set S together with the unique subset H of S that
// never occurs as a trace F ∩ S.
struct ShPair {
  Mask s = 0;
  Mask h = 0;
  friend bool operator==(const ShPair&, const ShPair&) = default;
  friend auto operator<=>(const ShPair&, const ShPair&) = default;
};

// f_{S,H} = (prod_{j in H} x_j) * (prod_{i in S\H} (x_i - 1)), expanded.
// Nonzero at a 0/1 point v exactly when v ∩ S = H. Throws NotASubset.
Polynomial build_f_sh(Mask s, Mask h);

// x_i^2 - x_i.
Polynomial field_polynomial(int i);

// One pair per inclusion-minimal S outside Sh(F), sorted by (S, H).
// Throws NotExtremal; NonUniqueH signals a broken invariant.
std::vector<ShPair> minimal_nonshattered_pairs(const SetSystem& f);

// The f_{S,H} of minimal_nonshattered_pairs followed by x_i^2 - x_i for
// i = 1..n. Throws NotExtremal.
std::vector<Polynomial> assemble_groebner_basis(const SetSystem& f);

struct LeadingTerm {
  Monomial monomial;
  Rational coefficient;
};

LeadingTerm leading_term(const Polynomial& p, const LexOrder& ord);
// Throws ZeroPolynomial.
Monomial lex_leading_monomial(const Polynomial& p, const LexOrder& ord);

// Variables i for which x_i^2 - x_i occurs in `basis`. Products formed while
// working against such a basis fold exponents above 2 back down.
Mask field_context(std::span<const Polynomial> basis);

// S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L = lcm(lm f, lm g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const LexOrder& ord,
                        Mask fold = 0);

// Remainder of multivariate division. Repeatedly takes the ord-largest term;
// it is eliminated with the first basis element (list order) whose leading
// monomial divides it, or moved to the remainder.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const LexOrder& ord);

// Buchberger's criterion: every pairwise S-polynomial reduces to 0.
bool buchberger_check(std::span<const Polynomial> basis, const LexOrder& ord);

// Points of {0,1}^n where every polynomial vanishes, as a family on [n].
SetSystem common_zero_set(std::span<const Polynomial> polys, int n);

enum class Vc1BasisMode {
  kFull,          // one polynomial per 2-subset of labels
  kAdjacentOnly,  // only pairs of edges sharing a tree vertex
};

// f_{S,H} pairs read off the orientation of the two labelled edges along the
// tree path joining them: H holds each label whose edge points away from the
// other edge. Requires F to be VC-dim <= 1 extremal with support [n] and empty
// common intersection (PreconditionViolated otherwise).
std::vector<ShPair> vc1_pairs_from_tree(const SetSystem& f, Vc1BasisMode mode);
// The pair polynomials followed by the n field polynomials.
std::vector<Polynomial> vc1_basis_from_tree(const SetSystem& f, Vc1BasisMode mode);

// Checks (x_c - e_c) f_ab - (x_a - e_a) f_bc = (1 - 2 e_b) f_ac as an exact
// polynomial identity, where
//   f_ab = (x_a - e_a)(x_b - e_b), f_bc = (x_b - 1 + e_b)(x_c - e_c),
//   f_ac = (x_a - e_a)(x_c - e_c), and e_* are 0/1 orientation bits.
bool adjacent_pair_identity_check(int e_a, int e_b, int e_c);

}  // namespace shatter

#endif  // SHATTER_GROEBNER_HPP

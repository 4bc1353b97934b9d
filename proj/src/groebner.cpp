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

#include "shatter/groebner.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"
#include "shatter/inclusion_graph.hpp"

namespace shatter {
namespace {

void require_nonzero(const Polynomial& p, const char* what) {
  if (p.is_zero()) fail(ErrorCode::kZeroPolynomial, std::string(what) + ": zero polynomial");
}

// x_i - c.
Polynomial shifted_variable(int i, int c) {
  return Polynomial::variable(i) - Polynomial::constant(c);
}

void require_tree_family(const SetSystem& f) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, "tree basis of an empty family");
  if (!classify_vc1_extremal(f)) {
    fail(ErrorCode::kPreconditionViolated, "family is not s-extremal of VC-dimension <= 1");
  }
  if (support(f) != universe(f.ground_size())) fail(ErrorCode::kPreconditionViolated, "support is not [n]");
  if (common_intersection(f) != 0) {
    fail(ErrorCode::kPreconditionViolated, "common intersection is not empty");
  }
}

}  // namespace

Polynomial build_f_sh(Mask s, Mask h) {
  if (!is_subset(h, s)) fail(ErrorCode::kNotASubset, format_set(h) + " is not a subset of " + format_set(s));
  // Expand prod_{i in S\H}(x_i - 1): the term x_T (T ⊆ S\H) has sign (-1)^{|S\H|-|T|}.
  const Mask free = s & ~h;
  const int free_size = popcount(free);
  Polynomial p;
  for (Mask t = free;; t = (t - 1) & free) {
    const int sign = ((free_size - popcount(t)) % 2 == 0) ? 1 : -1;
    p.add_term(Monomial::square_free(h | t), sign);
    if (t == 0) break;
  }
  return p;
}

Polynomial field_polynomial(int i) {
  Polynomial p = Polynomial::term(Monomial::square(i), 1);
  p.add_term(Monomial::square_free(element_bit(i)), -1);
  return p;
}

std::vector<ShPair> minimal_nonshattered_pairs(const SetSystem& f) {
  if (!is_extremal(f)) fail(ErrorCode::kNotExtremal, "minimal_nonshattered_pairs needs an s-extremal family");
  const int n = f.ground_size();
  const SetFamily sh = shattered_family(f);

  // A minimal non-shattered S is a shattered set plus one element.
  std::vector<Mask> minimal;
  for (Mask base : sh) {
    for (int e = 1; e <= n; ++e) {
      const Mask bit = element_bit(e);
      if ((base & bit) != 0) continue;
      const Mask s = base | bit;
      if (sh.contains(s)) continue;
      bool all_subsets_shattered = true;
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        const Mask low = rest & (~rest + 1);
        if (!sh.contains(s & ~low)) {
          all_subsets_shattered = false;
          break;
        }
      }
      if (all_subsets_shattered) minimal.push_back(s);
    }
  }
  std::sort(minimal.begin(), minimal.end());
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());

  std::vector<ShPair> pairs;
  pairs.reserve(minimal.size());
  for (Mask s : minimal) {
    std::vector<Mask> traces;
    traces.reserve(f.size());
    for (Mask m : f) traces.push_back(m & s);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());

    std::vector<Mask> missing;
    for (Mask h = s;; h = (h - 1) & s) {
      if (!std::binary_search(traces.begin(), traces.end(), h)) missing.push_back(h);
      if (h == 0) break;
    }
    if (missing.size() != 1) {
      fail(ErrorCode::kNonUniqueH, "minimal non-shattered set " + format_set(s) + " misses " +
                                       std::to_string(missing.size()) + " traces");
    }
    pairs.push_back({s, missing.front()});
  }
  return pairs;
}

std::vector<Polynomial> assemble_groebner_basis(const SetSystem& f) {
  std::vector<Polynomial> basis;
  for (const auto& pair : minimal_nonshattered_pairs(f)) basis.push_back(build_f_sh(pair.s, pair.h));
  for (int i = 1; i <= f.ground_size(); ++i) basis.push_back(field_polynomial(i));
  return basis;
}

LeadingTerm leading_term(const Polynomial& p, const LexOrder& ord) {
  require_nonzero(p, "leading term");
  auto best = p.terms().begin();
  std::uint64_t best_key = ord.key(best->first);
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    const std::uint64_t k = ord.key(it->first);
    if (k > best_key) {
      best = it;
      best_key = k;
    }
  }
  return {best->first, best->second};
}

Monomial lex_leading_monomial(const Polynomial& p, const LexOrder& ord) {
  return leading_term(p, ord).monomial;
}

Mask field_context(std::span<const Polynomial> basis) {
  Mask vars = 0;
  for (const auto& p : basis) {
    if (p.term_count() != 2) continue;
    for (int i : elements_of(p.variables())) {
      if (p == field_polynomial(i)) vars |= element_bit(i);
    }
  }
  return vars;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const LexOrder& ord, Mask fold) {
  const LeadingTerm lf = leading_term(f, ord);
  const LeadingTerm lg = leading_term(g, ord);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  Polynomial s = f.times_term(quotient(l, lf.monomial), 1 / lf.coefficient, fold);
  s -= g.times_term(quotient(l, lg.monomial), 1 / lg.coefficient, fold);
  return s;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const LexOrder& ord) {
  if (basis.empty()) fail(ErrorCode::kPreconditionViolated, "reduce needs a nonempty basis");
  std::vector<LeadingTerm> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(leading_term(g, ord));
  const Mask fold = field_context(basis);

  Polynomial p = f;
  Polynomial remainder;
  while (!p.is_zero()) {
    const LeadingTerm lt = leading_term(p, ord);
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!leads[k].monomial.divides(lt.monomial)) continue;
      p -= basis[k].times_term(quotient(lt.monomial, leads[k].monomial),
                               lt.coefficient / leads[k].coefficient, fold);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lt.monomial, lt.coefficient);
      p.add_term(lt.monomial, -lt.coefficient);
    }
  }
  return remainder;
}

bool buchberger_check(std::span<const Polynomial> basis, const LexOrder& ord) {
  if (basis.empty()) fail(ErrorCode::kPreconditionViolated, "buchberger_check needs a nonempty basis");
  const Mask fold = field_context(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j], ord, fold), basis, ord).is_zero()) return false;
    }
  }
  return true;
}

SetSystem common_zero_set(std::span<const Polynomial> polys, int n) {
  check_ground_size(n);
  std::vector<Mask> zeros;
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t i = 0; i < total; ++i) {
    const Mask point = static_cast<Mask>(i);
    bool all_zero = true;
    for (const auto& p : polys) {
      if (p.evaluate(point).numerator() != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) zeros.push_back(point);
  }
  return SetSystem(n, std::move(zeros));
}

std::vector<ShPair> vc1_pairs_from_tree(const SetSystem& f, Vc1BasisMode mode) {
  require_tree_family(f);
  const int n = f.ground_size();
  const auto graph = build_inclusion_graph(f);
  const auto adj = graph.adjacency();
  const std::size_t m = graph.vertex_count();

  std::vector<LabeledEdge> by_label(static_cast<std::size_t>(n) + 1);
  for (const auto& e : graph.edges) by_label[static_cast<std::size_t>(e.label)] = e;

  // Distances from both endpoints of `e`; in a tree the endpoints of any other
  // edge sit at distances d and d+1, and the nearer one faces `e`.
  auto distances_from_edge = [&](const LabeledEdge& e) {
    std::vector<int> dist(m, -1);
    std::queue<std::size_t> q;
    dist[e.from] = dist[e.to] = 0;
    q.push(e.from);
    q.push(e.to);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
    return dist;
  };
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n) + 1);
  for (int label = 1; label <= n; ++label) {
    dist[static_cast<std::size_t>(label)] = distances_from_edge(by_label[static_cast<std::size_t>(label)]);
  }

  auto points_toward = [&](int label, int other) {
    const LabeledEdge& e = by_label[static_cast<std::size_t>(label)];
    const auto& d = dist[static_cast<std::size_t>(other)];
    return d[e.to] < d[e.from];
  };
  auto share_vertex = [&](int a, int b) {
    const LabeledEdge& x = by_label[static_cast<std::size_t>(a)];
    const LabeledEdge& y = by_label[static_cast<std::size_t>(b)];
    return x.from == y.from || x.from == y.to || x.to == y.from || x.to == y.to;
  };

  std::vector<ShPair> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (mode == Vc1BasisMode::kAdjacentOnly && !share_vertex(a, b)) continue;
      Mask h = 0;
      if (!points_toward(a, b)) h |= element_bit(a);
      if (!points_toward(b, a)) h |= element_bit(b);
      pairs.push_back({element_bit(a) | element_bit(b), h});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<Polynomial> vc1_basis_from_tree(const SetSystem& f, Vc1BasisMode mode) {
  std::vector<Polynomial> basis;
  for (const auto& pair : vc1_pairs_from_tree(f, mode)) basis.push_back(build_f_sh(pair.s, pair.h));
  for (int i = 1; i <= f.ground_size(); ++i) basis.push_back(field_polynomial(i));
  return basis;
}

bool adjacent_pair_identity_check(int e_a, int e_b, int e_c) {
  if ((e_a | e_b | e_c) & ~1) fail(ErrorCode::kParameterOutOfRange, "orientation bits must be 0 or 1");
  constexpr int a = 1, b = 2, c = 3;
  const Polynomial f_ab = shifted_variable(a, e_a) * shifted_variable(b, e_b);
  const Polynomial f_bc = shifted_variable(b, 1 - e_b) * shifted_variable(c, e_c);
  const Polynomial f_ac = shifted_variable(a, e_a) * shifted_variable(c, e_c);
  const Polynomial lhs = shifted_variable(c, e_c) * f_ab - shifted_variable(a, e_a) * f_bc;
  const Polynomial rhs = Rational(1 - 2 * e_b) * f_ac;
  return lhs == rhs;
}

}  // namespace shatter

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

// Brute-force reference implementations. Each one follows a definition
// literally and shares no code with the library beyond the SetSystem type.
#ifndef SHATTER_TESTS_ORACLES_HPP
#define SHATTER_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shatter/set_system.hpp"

namespace oracle {

using shatter::Mask;
using shatter::SetSystem;

inline bool has(const std::vector<Mask>& v, Mask m) { return std::find(v.begin(), v.end(), m) != v.end(); }

inline std::vector<Mask> subsets_of(Mask s) {
  std::vector<Mask> out;
  for (Mask h = 0; h <= s; ++h) {
    if ((h & ~s) == 0) out.push_back(h);
  }
  return out;
}

inline std::set<Mask> traces(const SetSystem& f, Mask s) {
  std::set<Mask> out;
  for (Mask m : f) out.insert(m & s);
  return out;
}

// Every S whose 2^|S| subsets all occur as traces.
inline std::vector<Mask> shattered(const SetSystem& f) {
  std::vector<Mask> out;
  const Mask cube = Mask{1} << f.ground_size();
  if (f.empty()) return out;
  for (Mask s = 0; s < cube; ++s) {
    if (traces(f, s).size() == (std::size_t{1} << std::popcount(s))) out.push_back(s);
  }
  return out;
}

// Every I with some B ⊆ [n] \ I such that B ∪ H ∈ F for all H ⊆ I.
inline std::vector<Mask> strongly_shattered(const SetSystem& f) {
  std::vector<Mask> out;
  const Mask cube = Mask{1} << f.ground_size();
  for (Mask i = 0; i < cube; ++i) {
    bool found = false;
    for (Mask b = 0; b < cube && !found; ++b) {
      if ((b & i) != 0) continue;
      bool all = true;
      for (Mask h : subsets_of(i)) all = all && f.contains(b | h);
      found = all;
    }
    if (found) out.push_back(i);
  }
  return out;
}

inline bool extremal(const SetSystem& f) { return !f.empty() && shattered(f).size() == f.size(); }

inline int vc(const SetSystem& f) {
  int best = -1;
  for (Mask s : shattered(f)) best = std::max(best, std::popcount(s));
  return best;
}

// Every nonempty family on [n], as the members of bitmap code 1..2^(2^n)-1.
inline void for_each_family(int n, const std::function<void(const SetSystem&)>& fn) {
  const std::uint64_t cube = std::uint64_t{1} << n;
  const std::uint64_t total = std::uint64_t{1} << cube;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Mask> members;
    for (std::uint64_t m = 0; m < cube; ++m) {
      if ((code >> m) & 1U) members.push_back(static_cast<Mask>(m));
    }
    fn(SetSystem(n, std::move(members)));
  }
}

// Hamming-1 graph on F, undirected BFS distances from index `src`.
inline std::vector<int> hamming_bfs(const SetSystem& f, std::size_t src) {
  std::vector<int> dist(f.size(), -1);
  std::queue<std::size_t> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (dist[v] < 0 && std::popcount(f[u] ^ f[v]) == 1) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

inline bool connected(const SetSystem& f) {
  if (f.empty()) return true;
  const auto d = hamming_bfs(f, 0);
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

inline std::size_t hamming_edges(const SetSystem& f) {
  std::size_t e = 0;
  for (std::size_t u = 0; u < f.size(); ++u) {
    for (std::size_t v = u + 1; v < f.size(); ++v) e += std::popcount(f[u] ^ f[v]) == 1;
  }
  return e;
}

inline Mask union_of(const SetSystem& f) {
  Mask u = 0;
  for (Mask m : f) u |= m;
  return u;
}

inline Mask intersection_of(const SetSystem& f) {
  Mask u = ~Mask{0};
  for (Mask m : f) u &= m;
  return u;
}

// Extremal, VC-dim <= 1, support [n], empty common intersection.
inline bool vc1_full(const SetSystem& f) {
  const Mask all = (Mask{1} << f.ground_size()) - 1;
  return extremal(f) && vc(f) <= 1 && union_of(f) == all && intersection_of(f) == 0;
}

// D_i(F) from the definition.
inline SetSystem downshift(const SetSystem& f, int i) {
  const Mask bit = Mask{1} << (i - 1);
  std::vector<Mask> out;
  for (Mask m : f) {
    const bool keep = (m & bit) == 0 || f.contains(m & ~bit);
    out.push_back(keep ? m : (m & ~bit));
  }
  return SetSystem(f.ground_size(), out);
}

// Rank over Q of 0/1 row vectors, by Gaussian elimination in exact
// big-integer rationals.
inline std::size_t rational_rank(std::vector<std::vector<boost::multiprecision::cpp_rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const boost::multiprecision::cpp_rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Greedy standard monomials: square-free monomials in increasing lex order
// (perm[0] most significant), kept when their evaluation vector raises the
// rational rank.
inline std::vector<Mask> standard_monomials(const SetSystem& f, const std::vector<int>& perm) {
  const int n = f.ground_size();
  auto key = [&](Mask t) {
    std::uint64_t k = 0;
    for (int v : perm) k = (k << 1) | ((t >> (v - 1)) & 1U);
    return k;
  };
  std::vector<Mask> all;
  for (Mask t = 0; t < (Mask{1} << n); ++t) all.push_back(t);
  std::sort(all.begin(), all.end(), [&](Mask a, Mask b) { return key(a) < key(b); });

  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> kept_rows;
  std::vector<Mask> kept;
  for (Mask t : all) {
    if (kept.size() == f.size()) break;
    std::vector<Q> row;
    for (Mask m : f) row.emplace_back((t & ~m) == 0 ? 1 : 0);
    auto trial = kept_rows;
    trial.push_back(row);
    if (rational_rank(trial) == kept_rows.size() + 1) {
      kept_rows.push_back(std::move(row));
      kept.push_back(t);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// G = {H : H ∩ X ∈ F|_X for every |X| = w}, straight from the definition.
inline std::vector<Mask> lift(const SetSystem& f, int w) {
  const int n = f.ground_size();
  std::vector<Mask> out;
  for (Mask h = 0; h < (Mask{1} << n); ++h) {
    bool inside = true;
    for (Mask x = 0; x < (Mask{1} << n) && inside; ++x) {
      if (std::popcount(x) != w) continue;
      inside = traces(f, x).count(h & x) != 0;
    }
    if (inside) out.push_back(h);
  }
  return out;
}

// No t-set X has all of its l-subsets among the traces on X.
inline bool forbidden_traces(const SetSystem& f, int t, int l) {
  const int n = f.ground_size();
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (std::popcount(x) != t) continue;
    const auto tr = traces(f, x);
    bool all = true;
    for (Mask y : subsets_of(x)) {
      if (std::popcount(y) == l) all = all && tr.count(y) != 0;
    }
    if (all) return false;
  }
  return true;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle

#endif  // SHATTER_TESTS_ORACLES_HPP

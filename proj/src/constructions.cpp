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

#include "shatter/constructions.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <thread>

#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"
#include "shatter/sampling.hpp"

namespace shatter {
namespace {

constexpr int kMaxRandomScanSize = 8;

std::vector<Mask> sets_of_size(int n, int k) {
  std::vector<Mask> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (popcount(static_cast<Mask>(m)) == k) out.push_back(static_cast<Mask>(m));
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

using TreeEdges = std::vector<std::pair<std::size_t, std::size_t>>;

TreeEdges bfs_tree(const std::vector<std::vector<std::size_t>>& adj) {
  TreeEdges tree;
  std::vector<bool> seen(adj.size(), false);
  std::queue<std::size_t> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      tree.emplace_back(u, v);
      q.push(v);
    }
  }
  return tree;
}

TreeEdges random_tree(std::size_t vertices, TreeEdges edges, Rng& rng) {
  std::shuffle(edges.begin(), edges.end(), rng);
  UnionFind uf(vertices);
  TreeEdges tree;
  for (auto [u, v] : edges) {
    if (uf.unite(u, v)) tree.emplace_back(u, v);
  }
  return tree;
}

std::vector<Mask> set_difference(const SetFamily& before, const SetFamily& after) {
  std::vector<Mask> out;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(out));
  return out;
}

void check_fq_parameters(int n, int t, int l) {
  check_ground_size(n);
  if (!(n >= t && t >= l && l >= 0 && t >= 1)) {
    fail(ErrorCode::kParameterOutOfRange, "need n >= t >= l >= 0 and t >= 1, got n=" + std::to_string(n) +
                                              " t=" + std::to_string(t) + " l=" + std::to_string(l));
  }
}

// All masks of popcount k below 2^n, by Gosper's hack.
std::vector<Mask> windows(int n, int k) {
  if (k == 0) return {0};
  std::vector<Mask> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit;) {
    out.push_back(static_cast<Mask>(x));
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

struct FamilyVerdict {
  bool extremal = false;
  bool checked = false;
  bool removable = false;
  bool addable = false;
  bool duality_mismatch = false;
};

FamilyVerdict examine(const SetSystem& f) {
  FamilyVerdict v;
  v.extremal = is_extremal(f);
  if (!v.extremal || f.size() < 2) return v;
  v.checked = true;
  v.removable = find_removable(f).has_value();
  const SetSystem complement = complement_family(f);
  if (complement.empty()) {
    v.addable = true;
  } else if (!is_extremal(complement)) {
    v.duality_mismatch = true;
    return v;
  } else {
    v.addable = find_addable(complement).has_value();
  }
  v.duality_mismatch = v.removable != v.addable;
  return v;
}

void merge(ScanReport& into, const ScanReport& part, std::size_t max_examples) {
  into.families_scanned += part.families_scanned;
  into.extremal_families += part.extremal_families;
  into.removable_found += part.removable_found;
  into.addable_found += part.addable_found;
  into.counterexamples += part.counterexamples;
  into.duality_mismatches += part.duality_mismatches;
  for (const auto& e : part.examples) {
    if (into.examples.size() < max_examples) into.examples.push_back(e);
  }
}

void record(ScanReport& r, const SetSystem& f, std::size_t max_examples) {
  ++r.families_scanned;
  const FamilyVerdict v = examine(f);
  if (!v.extremal) return;
  ++r.extremal_families;
  if (!v.checked) return;
  if (v.removable) ++r.removable_found;
  if (v.addable) ++r.addable_found;
  if (v.duality_mismatch) ++r.duality_mismatches;
  if (!v.removable) {
    ++r.counterexamples;
    if (r.examples.size() < max_examples) r.examples.push_back(f);
  }
}

}  // namespace

bool is_down_set(const SetSystem& f) {
  for (Mask m : f) {
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      if (!f.contains(m & ~(rest & (~rest + 1)))) return false;
    }
  }
  return true;
}

SetSystem down_closure(const SetSystem& f) {
  std::vector<Mask> out;
  for (Mask m : f) {
    for (Mask s = m;; s = (s - 1) & m) {
      out.push_back(s);
      if (s == 0) break;
    }
  }
  return SetSystem(f.ground_size(), std::move(out));
}

AnsteeResult anstee_construct(int n, TreeStrategy strategy, std::uint64_t seed) {
  check_ground_size(n);
  if (n < 2) fail(ErrorCode::kParameterOutOfRange, "Anstee construction needs n >= 2");
  Rng rng(seed);
  std::vector<Mask> members = sets_of_size(n, 0);
  const auto singletons = sets_of_size(n, 1);
  members.insert(members.end(), singletons.begin(), singletons.end());

  AnsteeResult result;
  SetSystem f(n, members);
  SetFamily sh = shattered_family(f);
  for (int k = 2; k <= n; ++k) {
    std::vector<Mask> level;
    for (Mask m : f) {
      if (popcount(m) == k - 1) level.push_back(m);
    }
    std::vector<std::vector<std::size_t>> adj(level.size());
    TreeEdges edges;
    for (std::size_t u = 0; u < level.size(); ++u) {
      for (std::size_t v = u + 1; v < level.size(); ++v) {
        if (popcount(level[u] ^ level[v]) != 2) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(u, v);
      }
    }
    const TreeEdges tree =
        strategy == TreeStrategy::kDeterministicMin ? bfs_tree(adj) : random_tree(level.size(), edges, rng);
    if (tree.size() + 1 != level.size()) {
      fail(ErrorCode::kDisconnectedLevelGraph,
           "graph on the " + std::to_string(k - 1) + "-sets is disconnected");
    }
    for (auto [u, v] : tree) {
      AnsteeStep step;
      step.level = k;
      step.a = level[u];
      step.b = level[v];
      step.added = level[u] | level[v];
      f = f.with(step.added);
      SetFamily next_sh = shattered_family(f);
      step.new_shattered = set_difference(next_sh, sh);
      sh = std::move(next_sh);
      result.steps.push_back(std::move(step));
    }
  }
  result.family = std::move(f);
  return result;
}

bool forbidden_trace_check(const SetSystem& f, int t, int l) {
  const int n = f.ground_size();
  if (!(n >= t && t >= l && l >= 0)) {
    fail(ErrorCode::kParameterOutOfRange, "need n >= t >= l >= 0");
  }
  for (Mask x : windows(n, t)) {
    std::vector<Mask> traces;
    traces.reserve(f.size());
    for (Mask m : f) traces.push_back(m & x);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    bool all_present = true;
    for (Mask y = x;; y = (y - 1) & x) {
      if (popcount(y) == l && !std::binary_search(traces.begin(), traces.end(), y)) {
        all_present = false;
        break;
      }
      if (y == 0) break;
    }
    if (all_present) return false;
  }
  return true;
}

Mask fq_e_value(int n, int l, Mask x) {
  const auto xs = elements_of(x);
  const int i = static_cast<int>(xs.size());
  if (i < l) return x;
  if (l == 0) return universe(n) & ~x;
  Mask e = 0;
  for (int j = 0; j < l; ++j) e |= element_bit(xs[static_cast<std::size_t>(j)]);
  const int threshold = xs[static_cast<std::size_t>(l - 1)];
  const Mask above = universe(n) & ~universe(threshold);
  Mask tail = 0;
  for (int j = l; j < i; ++j) tail |= element_bit(xs[static_cast<std::size_t>(j)]);
  return e | (above & ~tail);
}

bool fq_index_greater(Mask x, Mask y) {
  const int px = popcount(x), py = popcount(y);
  if (px != py) return px > py;
  // The smaller first differing element wins.
  const Mask diff = x ^ y;
  return diff != 0 && (x & diff & (~diff + 1)) != 0;
}

FqFamily furedi_quinn(int n, int t, int l) {
  check_fq_parameters(n, t, l);
  FqFamily out;
  for (int i = 0; i < t; ++i) {
    for (Mask x : windows(n, i)) out.members.push_back({x, fq_e_value(n, l, x)});
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const FqMember& a, const FqMember& b) { return fq_index_greater(a.index, b.index); });
  std::vector<Mask> sets;
  sets.reserve(out.members.size());
  for (const auto& m : out.members) sets.push_back(m.set);
  out.family = SetSystem(n, sets);
  if (out.family.size() != out.members.size()) {
    std::sort(sets.begin(), sets.end());
    const auto dup = std::adjacent_find(sets.begin(), sets.end());
    fail(ErrorCode::kDuplicateEValue, "E-value " + format_set(*dup) + " occurs twice");
  }
  return out;
}

PeelReport fq_peel(int n, int t, int l) {
  const FqFamily fq = furedi_quinn(n, t, l);
  PeelReport r;
  r.input = fq.family;
  SetSystem current = fq.family;
  SetFamily sh = shattered_family(current);
  for (const auto& member : fq.members) {
    current = current.without(member.set);
    SetFamily next_sh = shattered_family(current);
    const bool ok = is_extremal_or_empty(current);
    r.order.push_back(member.set);
    r.index_sets.push_back(member.index);
    r.extremal_after_each.push_back(ok);
    r.eliminated_shattered.push_back(set_difference(sh, next_sh));
    if (!ok && !r.failure_index) r.failure_index = r.order.size() - 1;
    sh = std::move(next_sh);
  }
  return r;
}

std::optional<Mask> find_removable(const SetSystem& f) {
  if (!is_extremal(f)) fail(ErrorCode::kNotExtremal, "find_removable needs an s-extremal family");
  for (Mask m : f) {
    if (is_extremal_or_empty(f.without(m))) return m;
  }
  return std::nullopt;
}

std::optional<Mask> find_addable(const SetSystem& f) {
  if (!is_extremal(f)) fail(ErrorCode::kNotExtremal, "find_addable needs an s-extremal family");
  const std::uint64_t total = std::uint64_t{1} << f.ground_size();
  for (std::uint64_t c = 0; c < total; ++c) {
    const Mask m = static_cast<Mask>(c);
    if (!f.contains(m) && is_extremal(f.with(m))) return m;
  }
  return std::nullopt;
}

PeelReport peel_sequence(const SetSystem& f) {
  PeelReport r;
  r.input = f;
  if (f.empty()) return r;
  if (!is_extremal(f)) fail(ErrorCode::kNotExtremal, "peel_sequence needs an s-extremal family");
  SetSystem current = f;
  SetFamily sh = shattered_family(current);
  while (!current.empty()) {
    const auto m = find_removable(current);
    if (!m) {
      r.stuck = current;
      break;
    }
    current = current.without(*m);
    SetFamily next_sh = shattered_family(current);
    r.order.push_back(*m);
    r.extremal_after_each.push_back(true);
    r.eliminated_shattered.push_back(set_difference(sh, next_sh));
    sh = std::move(next_sh);
  }
  return r;
}

ScanReport conjecture_scan(int n, const ScanOptions& opts) {
  check_ground_size(n);
  if (n < 1) fail(ErrorCode::kParameterOutOfRange, "conjecture scan needs n >= 1");
  if (opts.exhaustive && n > 4) fail(ErrorCode::kGroundSetTooLarge, "exhaustive scan needs n <= 4");
  if (!opts.exhaustive && n > kMaxRandomScanSize) {
    fail(ErrorCode::kGroundSetTooLarge, "random scan needs n <= " + std::to_string(kMaxRandomScanSize));
  }
  ScanReport total;
  total.n = n;
  total.exhaustive = opts.exhaustive;
  total.seed = opts.seed;

  const std::uint64_t cube = std::uint64_t{1} << n;
  const std::uint64_t items = opts.exhaustive ? (std::uint64_t{1} << cube) - 1 : opts.random_count;
  const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max<std::uint64_t>(items, 1))));

  // Item k is family k+1 of the membership bitmap (exhaustive) or the k-th
  // random draw seeded from (seed, k), so results do not depend on `jobs`.
  auto family_at = [&](std::uint64_t k) {
    if (opts.exhaustive) {
      const std::uint64_t code = k + 1;
      std::vector<Mask> members;
      for (std::uint64_t m = 0; m < cube; ++m) {
        if ((code >> m) & 1U) members.push_back(static_cast<Mask>(m));
      }
      return SetSystem(n, std::move(members));
    }
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
    Rng rng(seq);
    std::uniform_int_distribution<std::uint64_t> size(2, cube);
    return random_extremal_family(n, size(rng), rng);
  };

  std::vector<ScanReport> parts(jobs);
  auto work = [&](unsigned w) {
    const std::uint64_t begin = items * w / jobs;
    const std::uint64_t end = items * (w + 1) / jobs;
    for (std::uint64_t k = begin; k < end; ++k) record(parts[w], family_at(k), opts.max_examples);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  for (const auto& part : parts) merge(total, part, opts.max_examples);
  return total;
}

}  // namespace shatter

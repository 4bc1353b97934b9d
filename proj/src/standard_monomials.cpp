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

#include "shatter/standard_monomials.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>

#include "shatter/errors.hpp"

namespace shatter {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e != 0; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// The k largest primes below 2^61.
std::vector<u64> primes(std::size_t k) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard lock(mu);
  u64 candidate = cache.empty() ? (u64{1} << 61) - 1 : cache.back() - 2;
  while (cache.size() < k) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(k)};
}

// Number of ~61-bit primes whose product exceeds Hadamard's bound
// (d+1)^((d+1)/2) / 2^d on any d x d minor of a 0/1 matrix.
std::size_t primes_needed(std::size_t d) {
  const double dd = static_cast<double>(d);
  const double log2_bound = (dd + 1) / 2 * std::log2(dd + 1) - dd;
  return static_cast<std::size_t>(std::max(0.0, log2_bound) / 60.0) + 1;
}

// Echelon basis of kept evaluation vectors modulo one prime.
class ModularBasis {
 public:
  explicit ModularBasis(u64 p) : p_(p) {}

  bool live() const { return live_; }
  void kill() { live_ = false; }

  // Reduces v in place; true iff it leaves a nonzero residue.
  bool reduce(std::vector<u64>& v) const {
    for (const auto& [pivot, row] : rows_) {
      const u64 c = v[pivot];
      if (c == 0) continue;
      for (std::size_t k = pivot; k < v.size(); ++k) {
        if (row[k] != 0) v[k] = (v[k] + p_ - mul_mod(c, row[k], p_)) % p_;
      }
    }
    return std::any_of(v.begin(), v.end(), [](u64 x) { return x != 0; });
  }

  // Adds a reduced nonzero vector.
  void insert(std::vector<u64> v) {
    const std::size_t pivot =
        static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](u64 x) { return x != 0; }) - v.begin());
    const u64 inv = pow_mod(v[pivot], p_ - 2, p_);
    for (auto& x : v) x = mul_mod(x, inv, p_);
    rows_.emplace_back(pivot, std::move(v));
  }

 private:
  u64 p_;
  bool live_ = true;
  std::vector<std::pair<std::size_t, std::vector<u64>>> rows_;
};

// Square-free monomial with the given bit pattern, where bit n-1-k of `code`
// stands for variable perm[k]. Increasing codes are increasing in lex.
Mask decode_code(u64 code, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Mask m = 0;
  for (int k = 0; k < n; ++k) {
    if ((code >> (n - 1 - k)) & 1U) m |= element_bit(perm[static_cast<std::size_t>(k)]);
  }
  return m;
}

SetFamily greedy_scan(const SetSystem& f, const LexOrder& ord) {
  const int n = f.ground_size();
  const std::size_t m = f.size();
  const auto& perm = ord.permutation();

  std::vector<ModularBasis> bases;
  for (u64 p : primes(primes_needed(m))) bases.emplace_back(p);

  std::vector<bool> kept(std::size_t{1} << n, false);
  std::vector<Mask> result;
  const u64 total = u64{1} << n;
  for (u64 code = 0; code < total && result.size() < m; ++code) {
    const Mask t = decode_code(code, perm);
    bool divisors_kept = true;
    for (Mask rest = t; rest != 0; rest &= rest - 1) {
      if (!kept[t & ~(rest & (~rest + 1))]) {
        divisors_kept = false;
        break;
      }
    }
    if (!divisors_kept) continue;

    std::vector<u64> column(m);
    for (std::size_t r = 0; r < m; ++r) column[r] = is_subset(t, f[r]) ? 1 : 0;

    std::vector<std::vector<u64>> residues(bases.size());
    bool independent = false;
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (!bases[j].live()) continue;
      residues[j] = column;
      if (bases[j].reduce(residues[j])) independent = true;
    }
    if (!independent) continue;
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (!bases[j].live()) continue;
      if (std::any_of(residues[j].begin(), residues[j].end(), [](u64 x) { return x != 0; })) {
        bases[j].insert(std::move(residues[j]));
      } else {
        bases[j].kill();
      }
    }
    kept[t] = true;
    result.push_back(t);
  }
  return SetFamily(n, std::move(result));
}

void recursive_scan(std::vector<Mask> family, const std::vector<int>& perm, std::size_t k,
                    Mask prefix, std::vector<Mask>& out) {
  if (family.empty()) return;
  if (k == perm.size()) {
    out.push_back(prefix);
    return;
  }
  const Mask bit = element_bit(perm[k]);
  std::vector<Mask> without, with;
  for (Mask m : family) ((m & bit) != 0 ? with : without).push_back(m & ~bit);
  std::sort(with.begin(), with.end());
  std::vector<Mask> joined, met;
  std::set_union(without.begin(), without.end(), with.begin(), with.end(), std::back_inserter(joined));
  std::set_intersection(without.begin(), without.end(), with.begin(), with.end(),
                        std::back_inserter(met));
  recursive_scan(std::move(joined), perm, k + 1, prefix, out);
  recursive_scan(std::move(met), perm, k + 1, prefix | bit, out);
}

void check_order(const SetSystem& f, const LexOrder& ord) {
  if (ord.size() != f.ground_size()) {
    fail(ErrorCode::kParameterOutOfRange, "lex order has " + std::to_string(ord.size()) +
                                              " variables, family has n=" + std::to_string(f.ground_size()));
  }
}

std::vector<std::size_t> probe_order(std::size_t count) {
  // Identity and its reverse are the first and last permutations.
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  if (count > 2) std::rotate(idx.begin() + 1, idx.end() - 1, idx.end());
  return idx;
}

}  // namespace

SetFamily standard_monomials(const SetSystem& f, const LexOrder& ord, SmMethod method) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, "standard monomials of an empty family");
  check_order(f, ord);
  if (method == SmMethod::kGreedy) return greedy_scan(f, ord);
  std::vector<Mask> out;
  out.reserve(f.size());
  recursive_scan(f.masks(), ord.permutation(), 0, 0, out);
  return SetFamily(f.ground_size(), std::move(out));
}

std::vector<LexOrder> all_lex_orders(int n) {
  if (n > kMaxExactOrderSize) {
    fail(ErrorCode::kGroundSetTooLarge, "all lex orders needs n <= " + std::to_string(kMaxExactOrderSize));
  }
  check_ground_size(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<LexOrder> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool extremality_via_sm(const SetSystem& f, std::span<const LexOrder> orders, SmMethod method) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, "extremality_via_sm of an empty family");
  if (orders.empty()) return true;
  const SetFamily first = standard_monomials(f, orders.front(), method);
  for (std::size_t k = 1; k < orders.size(); ++k) {
    if (standard_monomials(f, orders[k], method) != first) return false;
  }
  return true;
}

bool extremality_via_sm_exact(const SetSystem& f, SmMethod method) {
  const auto orders = all_lex_orders(f.ground_size());
  std::vector<LexOrder> probed;
  probed.reserve(orders.size());
  for (std::size_t k : probe_order(orders.size())) probed.push_back(orders[k]);
  return extremality_via_sm(f, probed, method);
}

SetFamily sh_via_sm_union(const SetSystem& f, std::span<const LexOrder> orders, SmMethod method) {
  if (f.empty()) fail(ErrorCode::kEmptyFamily, "sh_via_sm_union of an empty family");
  std::vector<Mask> all;
  for (const auto& ord : orders) {
    const SetFamily sm = standard_monomials(f, ord, method);
    all.insert(all.end(), sm.begin(), sm.end());
  }
  return SetFamily(f.ground_size(), std::move(all));
}

SetFamily sh_via_sm_union_exact(const SetSystem& f, SmMethod method) {
  const auto orders = all_lex_orders(f.ground_size());
  return sh_via_sm_union(f, orders, method);
}

}  // namespace shatter

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

#ifndef SHATTER_SET_SYSTEM_HPP
#define SHATTER_SET_SYSTEM_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace shatter {

// A subset of [n]: bit i-1 is set iff element i belongs to the set.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask element_bit(int element) { return Mask{1} << (element - 1); }
inline Mask universe(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// 1-based elements of a mask, ascending.
std::vector<int> elements_of(Mask m);
Mask mask_of(std::initializer_list<int> elements);
Mask mask_of(std::span<const int> elements);
// "{1,2,5}", or "{}" for the empty set.
std::string format_set(Mask m);

// A family of distinct subsets of [n], held in canonical form: strictly
// increasing masks. Structural equality is mathematical equality.
class SetSystem {
 public:
  SetSystem() = default;
  // Empty family on [n].
  explicit SetSystem(int n);
  // Sorts and deduplicates; every mask must lie below 2^n.
  SetSystem(int n, std::vector<Mask> members);

  // Convenience for literals: SetSystem::of(5, {{1, 5}, {2}, {}}).
  static SetSystem of(int n, std::initializer_list<std::initializer_list<int>> sets);
  // 2^[n].
  static SetSystem full_cube(int n);

  int ground_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Mask> members() const { return members_; }
  const std::vector<Mask>& masks() const { return members_; }
  Mask operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Mask m) const;
  // Index of m in members(), or -1.
  std::ptrdiff_t index_of(Mask m) const;

  SetSystem with(Mask m) const;
  SetSystem without(Mask m) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> members_;
};

// Result families such as Sh(F) and st(F). Same representation as SetSystem;
// the separate type keeps inputs and derived families apart in signatures.
class SetFamily : public SetSystem {
 public:
  using SetSystem::SetSystem;
  explicit SetFamily(SetSystem s) : SetSystem(std::move(s)) {}
};

// Throws GroundSetTooLarge / ParameterOutOfRange for n outside [0, kMaxGroundSize].
void check_ground_size(int n);
// Throws ElementOutOfRange unless 1 <= i <= n.
void check_element(int n, int i);

std::string to_string(const SetSystem& f);

}  // namespace shatter

#endif  // SHATTER_SET_SYSTEM_HPP

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

#include "shatter/set_system.hpp"

#include <algorithm>

#include "shatter/errors.hpp"

namespace shatter {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kInvalidGroundSubset: return "InvalidGroundSubset";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kLayerViolation: return "LayerViolation";
    case ErrorCode::kNotExtremal: return "NotExtremal";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kInvalidTree: return "InvalidTree";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotASubset: return "NotASubset";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kExponentOverflow: return "ExponentOverflow";
    case ErrorCode::kVcMismatch: return "VcMismatch";
    case ErrorCode::kDuplicateEValue: return "DuplicateEValue";
    case ErrorCode::kNonUniqueH: return "NonUniqueH";
    case ErrorCode::kDisconnectedLevelGraph: return "DisconnectedLevelGraph";
    case ErrorCode::kFalsified: return "Falsified";
  }
  return "Unknown";
}

bool is_consistency_failure(ErrorCode code) {
  return code == ErrorCode::kNonUniqueH || code == ErrorCode::kDisconnectedLevelGraph ||
         code == ErrorCode::kDuplicateEValue || code == ErrorCode::kFalsified;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::initializer_list<int> elements) {
  return mask_of(std::span<const int>(elements.begin(), elements.size()));
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize) {
      fail(ErrorCode::kElementOutOfRange, "element " + std::to_string(e) + " out of range");
    }
    m |= element_bit(e);
  }
  return m;
}

std::string format_set(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

void check_ground_size(int n) {
  if (n < 0) fail(ErrorCode::kParameterOutOfRange, "ground set size must be non-negative");
  if (n > kMaxGroundSize) {
    fail(ErrorCode::kGroundSetTooLarge,
         "ground set size " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxGroundSize));
  }
}

void check_element(int n, int i) {
  if (i < 1 || i > n) {
    fail(ErrorCode::kElementOutOfRange,
         "element " + std::to_string(i) + " not in [1," + std::to_string(n) + "]");
  }
}

SetSystem::SetSystem(int n) : n_(n) { check_ground_size(n); }

SetSystem::SetSystem(int n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {
  check_ground_size(n);
  const Mask all = universe(n);
  for (Mask m : members_) {
    if ((m & ~all) != 0) {
      fail(ErrorCode::kElementOutOfRange, "set " + format_set(m) + " is not a subset of [" +
                                              std::to_string(n) + "]");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetSystem SetSystem::of(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) masks.push_back(mask_of(s));
  return SetSystem(n, std::move(masks));
}

SetSystem SetSystem::full_cube(int n) {
  check_ground_size(n);
  std::vector<Mask> masks(std::size_t{1} << n);
  for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = static_cast<Mask>(i);
  return SetSystem(n, std::move(masks));
}

bool SetSystem::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

std::ptrdiff_t SetSystem::index_of(Mask m) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), m);
  if (it == members_.end() || *it != m) return -1;
  return it - members_.begin();
}

SetSystem SetSystem::with(Mask m) const {
  std::vector<Mask> next = members_;
  next.push_back(m);
  return SetSystem(n_, std::move(next));
}

SetSystem SetSystem::without(Mask m) const {
  std::vector<Mask> next;
  next.reserve(members_.size());
  for (Mask x : members_) {
    if (x != m) next.push_back(x);
  }
  SetSystem out(n_);
  out.members_ = std::move(next);
  return out;
}

std::string to_string(const SetSystem& f) {
  std::string out = "{";
  bool first = true;
  for (Mask m : f) {
    if (!first) out += ", ";
    out += format_set(m);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace shatter

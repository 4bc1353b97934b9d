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

#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "shatter/shatter.h"

namespace {

constexpr const char* kFt = "n=5\n1,5\n1,2,5\n2,5\n2,4,5\n2,3,4,5\n2\n";

struct FamilyPtr {
  shatter_family* p = nullptr;
  ~FamilyPtr() { shatter_family_free(p); }
};

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  shatter_string_free(s);
  return out;
}

TEST(CApiTest, ParseAndInspect) {
  FamilyPtr f;
  ASSERT_EQ(shatter_family_parse(kFt, &f.p), SHATTER_OK);
  EXPECT_EQ(shatter_family_ground_size(f.p), 5);
  EXPECT_EQ(shatter_family_size(f.p), 6U);
  std::vector<uint32_t> masks(6);
  EXPECT_EQ(shatter_family_masks(f.p, masks.data(), masks.size()), 6U);
  EXPECT_EQ(masks.front(), 2U);

  int vc = -2;
  EXPECT_EQ(shatter_vc_dimension(f.p, &vc), SHATTER_OK);
  EXPECT_EQ(vc, 1);
  for (auto m : {SHATTER_METHOD_DEFINITION, SHATTER_METHOD_BOLLOBAS_RADCLIFFE, SHATTER_METHOD_STANDARD_MONOMIALS}) {
    int ext = 0;
    EXPECT_EQ(shatter_is_extremal(f.p, m, &ext), SHATTER_OK);
    EXPECT_EQ(ext, 1);
  }

  FamilyPtr sh;
  ASSERT_EQ(shatter_shattered(f.p, &sh.p), SHATTER_OK);
  EXPECT_EQ(shatter_family_size(sh.p), 6U);

  char* json = nullptr;
  ASSERT_EQ(shatter_analyze_json(f.p, &json), SHATTER_OK);
  const auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["extremal"]["definition"], true);
  EXPECT_EQ(j["extremal"]["agree"], true);
  EXPECT_EQ(j["vc_dim"], 1);
}

TEST(CApiTest, Errors) {
  shatter_family* f = nullptr;
  EXPECT_EQ(shatter_family_parse("1,1\n", &f), SHATTER_E_PARSE);
  EXPECT_EQ(f, nullptr);
  EXPECT_NE(std::string(shatter_last_error()), "");
  EXPECT_EQ(shatter_family_parse(nullptr, &f), SHATTER_E_INVALID_ARGUMENT);
  const uint32_t bad[] = {8};
  EXPECT_EQ(shatter_family_from_masks(2, bad, 1, &f), SHATTER_E_ELEMENT_OUT_OF_RANGE);
  EXPECT_EQ(shatter_family_read_file("/nonexistent.ss", &f), SHATTER_E_PARSE);

  FamilyPtr two;
  const uint32_t sets[] = {1, 2};
  ASSERT_EQ(shatter_family_from_masks(2, sets, 2, &two.p), SHATTER_OK);
  shatter_tree* t = nullptr;
  EXPECT_EQ(shatter_tree_encode(two.p, &t), SHATTER_E_PRECONDITION_VIOLATED);
  char* out = nullptr;
  EXPECT_EQ(shatter_peel_json(two.p, &out), SHATTER_E_NOT_EXTREMAL);
  EXPECT_EQ(shatter_conjecture_json(5, 1, 0, 0, 1, &out), SHATTER_E_GROUND_SET_TOO_LARGE);

  EXPECT_EQ(shatter_status_is_consistency_failure(SHATTER_E_FALSIFIED), 1);
  EXPECT_EQ(shatter_status_is_consistency_failure(SHATTER_E_NON_UNIQUE_H), 1);
  EXPECT_EQ(shatter_status_is_consistency_failure(SHATTER_E_PARSE), 0);
  EXPECT_STREQ(shatter_status_name(SHATTER_OK), "OK");
  EXPECT_STREQ(shatter_status_name(SHATTER_E_PARSE), "ParseError");
}

TEST(CApiTest, TreeRoundTrip) {
  shatter_tree* t = nullptr;
  ASSERT_EQ(shatter_tree_parse("6\n0 1 2\n2 1 1\n2 3 4\n3 4 3\n5 2 5\n", &t), SHATTER_OK);
  FamilyPtr f;
  ASSERT_EQ(shatter_tree_decode(t, 0, &f.p), SHATTER_OK);
  char* text = nullptr;
  ASSERT_EQ(shatter_family_emit(f.p, SHATTER_FORMAT_SS, &text), SHATTER_OK);
  FamilyPtr g;
  ASSERT_EQ(shatter_family_parse(kFt, &g.p), SHATTER_OK);
  char* expected = nullptr;
  ASSERT_EQ(shatter_family_emit(g.p, SHATTER_FORMAT_SS, &expected), SHATTER_OK);
  EXPECT_EQ(take(text), take(expected));
  shatter_tree* back = nullptr;
  ASSERT_EQ(shatter_tree_encode(f.p, &back), SHATTER_OK);
  char* dot = nullptr;
  ASSERT_EQ(shatter_tree_dot(back, &dot), SHATTER_OK);
  EXPECT_NE(take(dot).find("digraph"), std::string::npos);
  shatter_tree_free(back);
  shatter_tree_free(t);
}

int count_members(const shatter_family* f, void* user) {
  *static_cast<size_t*>(user) += shatter_family_size(f);
  return 0;
}

TEST(CApiTest, EnumerateWithCallback) {
  size_t members = 0;
  uint64_t count = 0;
  ASSERT_EQ(shatter_enumerate_vc1(3, count_members, &members, &count), SHATTER_OK);
  EXPECT_EQ(count, 32U);
  EXPECT_EQ(members, 32U * 4U);
  EXPECT_EQ(shatter_vc1_count_formula(4), 400U);
  EXPECT_EQ(shatter_enumerate_vc1(4, nullptr, nullptr, &count), SHATTER_OK);
  EXPECT_EQ(count, 400U);
}

TEST(CApiTest, ReportsAsJson) {
  FamilyPtr f;
  ASSERT_EQ(shatter_family_parse(kFt, &f.p), SHATTER_OK);
  char* out = nullptr;
  const int order[] = {5, 4, 3, 2, 1};
  ASSERT_EQ(shatter_groebner_json(f.p, order, 5, SHATTER_BASIS_ASSEMBLED, &out), SHATTER_OK);
  auto j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["zero_set_is_family"], true);
  EXPECT_EQ(j["buchberger"], true);

  ASSERT_EQ(shatter_project_json(f.p, 1, 0, 0, &out), SHATTER_OK);
  j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["falsified"], false);

  ASSERT_EQ(shatter_fq_peel_json(4, 2, 1, &out), SHATTER_OK);
  j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["order"].size(), 5U);

  ASSERT_EQ(shatter_conjecture_json(3, 1, 0, 0, 2, &out), SHATTER_OK);
  j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["counterexamples"], 0);

  FamilyPtr a;
  ASSERT_EQ(shatter_construct_anstee(4, 0, 0, &a.p, &out), SHATTER_OK);
  EXPECT_EQ(shatter_family_size(a.p), 11U);
  EXPECT_EQ(nlohmann::json::parse(take(out))["steps"].size(), 6U);

  FamilyPtr q;
  ASSERT_EQ(shatter_construct_fq(5, 3, 2, &q.p), SHATTER_OK);
  EXPECT_EQ(shatter_family_size(q.p), 16U);
}

}  // namespace

// Copyright 2026 The treepos Authors.
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

#include <algorithm>

#include "test_oracle.hpp"
#include "treepos/language.hpp"
#include "treepos/linearize.hpp"
#include "treepos/random_expr.hpp"

namespace treepos {
namespace {

using E = TreeExpr;

RandomExprOptions small_options(bool allow_empty) {
  RandomExprOptions o;
  o.max_depth = 4;
  o.max_width = 3;
  o.allow_empty = allow_empty;
  return o;
}

TEST(EnumerateLanguageTest, ConstantAtAnyDepth) {
  for (int d = 1; d <= 4; ++d) {
    EXPECT_EQ(enumerate_language(E::constant("c"), d).trees,
              std::set<GroundTree>{GroundTree("c")});
  }
}

TEST(EnumerateLanguageTest, ProductSubstitutesLeaves) {
  E e = E::product(E::apply("f", {E::constant("a")}), "a", E::constant("b"));
  EXPECT_EQ(enumerate_language(e, 3).trees,
            std::set<GroundTree>{GroundTree("f", {GroundTree("b")})});
}

TEST(EnumerateLanguageTest, ExampleLanguageContainsListedTrees) {
  LinearizedExpr lin = linearize(testing::example1());
  auto trees = enumerate_language(lin.expr(), 2).trees;
  for (const char* t : {"b", "f1(b)", "h2(b)", "g3(b,a)"}) {
    bool found = false;
    for (const auto& s : trees) found = found || to_string(s) == t;
    EXPECT_TRUE(found) << t;
  }
  EXPECT_EQ(trees, testing::language(lin.expr(), 2));
}

TEST(EnumerateLanguageTest, StarIteratesToFixpoint) {
  E e = E::star(E::apply("f", {E::constant("a")}), "a");
  auto trees = enumerate_language(e, 3).trees;
  std::set<GroundTree> expected{
      GroundTree("a"), GroundTree("f", {GroundTree("a")}),
      GroundTree("f", {GroundTree("f", {GroundTree("a")})})};
  EXPECT_EQ(trees, expected);
}

TEST(EnumerateLanguageTest, TruncationIsFlagged) {
  E e = E::star(E::apply("g", {E::constant("a"), E::constant("a")}), "a");
  LanguageSample full = enumerate_language(e, 4);
  EXPECT_FALSE(full.truncated);
  LanguageSample cut = enumerate_language(e, 4, 3);
  EXPECT_TRUE(cut.truncated);
  EXPECT_LE(cut.trees.size(), 3u);
  for (const auto& t : cut.trees) EXPECT_TRUE(full.trees.count(t));
}

TEST(EnumerateLanguageTest, AgreesWithIndependentOracle) {
  RandomExprGenerator gen(11, small_options(true));
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    E e = gen.next();
    for (int d = 1; d <= 4 && testing::affordable(e, d); ++d) {
      ASSERT_EQ(enumerate_language(e, d).trees, testing::language(e, d))
          << e << " at depth " << d;
      compared += d == 4 ? 1 : 0;
    }
  }
  EXPECT_GT(compared, 250);
}

TEST(EnumerateLanguageTest, MonotoneInDepth) {
  RandomExprGenerator gen(12, small_options(true));
  for (int i = 0; i < 200; ++i) {
    E e = gen.next();
    std::set<GroundTree> previous;
    for (int d = 1; d <= 4 && testing::affordable(e, d); ++d) {
      auto trees = enumerate_language(e, d).trees;
      for (const auto& t : previous) ASSERT_TRUE(trees.count(t)) << e;
      for (const auto& t : trees) ASSERT_LE(t.depth(), d) << e;
      previous = std::move(trees);
    }
  }
}

TEST(NormalizeStarsTest, PreservesLanguage) {
  RandomExprGenerator gen(13, small_options(true));
  for (int i = 0; i < 300; ++i) {
    E e = gen.next();
    E n = normalize_stars(e);
    for (int d = 1; d <= 4 && testing::affordable(e, d); ++d) {
      LanguageSample normalized = enumerate_language(n, d, 20000);
      ASSERT_FALSE(normalized.truncated) << n;
      ASSERT_EQ(enumerate_language(e, d).trees, normalized.trees) << e;
    }
  }
}

TEST(ContainsConstantTest, MatchesEnumeratedLanguage) {
  RandomExprGenerator gen(14, small_options(true));
  for (int i = 0; i < 300; ++i) {
    E e = gen.next();
    // A constant is a depth-1 tree, so depth 1 already decides membership.
    auto lang = testing::language(e, 1);
    for (const char* c : {"a", "b", "c"}) {
      ASSERT_EQ(contains_constant(e, c), lang.count(GroundTree(c)) > 0)
          << e << " " << c;
    }
  }
}

TEST(IsEmptyLanguageTest, SoundOnRandomExpressions) {
  RandomExprGenerator gen(15, small_options(true));
  int empty = 0;
  for (int i = 0; i < 400; ++i) {
    E e = gen.next();
    if (is_empty_language(e)) {
      ++empty;
      ASSERT_TRUE(testing::affordable(e, 4)) << e;
      ASSERT_TRUE(testing::language(e, 4).empty()) << e;
    } else {
      // A non-empty language has a tree no deeper than the expression size.
      LanguageSample s = enumerate_language(e, measure(e).size, 2000);
      ASSERT_TRUE(s.truncated || !s.trees.empty()) << e;
    }
  }
  EXPECT_GT(empty, 0);
}

}  // namespace
}  // namespace treepos
